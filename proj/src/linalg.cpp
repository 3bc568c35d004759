#include "fglab/linalg.hpp"

namespace fglab {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  auto first = a_.begin() + static_cast<long>(r * cols_);
  return std::vector<Int>(first, first + static_cast<long>(cols_));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix shapes do not compose");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return out;
}

}  // namespace fglab
