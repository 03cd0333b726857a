#include "hopfrep/polyalg.hpp"

namespace hopfrep::poly {

std::vector<std::size_t> row_reduce(RationalMatrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t k = col; k < columns; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

KernelResult linear_kernel(const RationalMatrix& rows, std::size_t columns) {
  RationalMatrix m = rows;
  for (const auto& row : m)
    if (row.size() != columns) throw MismatchError("matrix is not rectangular");
  auto pivots = row_reduce(m, columns);

  KernelResult result;
  result.rank = pivots.size();
  result.columns = columns;
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    result.basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace hopfrep::poly
