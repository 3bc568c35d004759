#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "fglab/series.hpp"
#include "fglab/series_parse.hpp"

namespace fglab::test {

inline constexpr std::uint64_t kSeed = 20240611;

inline VarList symbols_then(const std::string& prefix, int count, const VarList& tail) {
  VarList vars;
  for (int i = 1; i <= count; ++i) vars.push_back({prefix + std::to_string(i), 0});
  vars.insert(vars.end(), tail.begin(), tail.end());
  return vars;
}

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rat(Int(num(rng)), Int(den(rng)));
}

inline Int random_int(std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<int> d(-range, range);
  return Int(d(rng));
}

/// Random sparse series in the context of `ctx` with up to `terms` terms.
inline QSeries random_series(std::mt19937_64& rng, const QSeries& ctx, int terms, int max_exp,
                             bool integral = false) {
  QSeries s = ctx.zero_like();
  std::uniform_int_distribution<int> ex(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    Exp e(ctx.nvars());
    for (auto& x : e) x = ex(rng);
    s.add_term(e, integral ? Rat(random_int(rng)) : random_rat(rng));
  }
  return s;
}

inline QSeries P(const std::string& text, const QSeries& ctx) {
  return parse_series(text, ctx.vars(), ctx.bound());
}

}  // namespace fglab::test
