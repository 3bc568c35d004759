#include "fglab/series.hpp"

namespace fglab {

std::string format_monomial(const VarList& vars, const Exp& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i].name;
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace fglab
