#pragma once

#include <cstddef>
#include <vector>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/point.hpp"
#include "nodalsplit/rat.hpp"

namespace nodalsplit {

struct Elimination {
  int rank = 0;
  std::vector<std::size_t> pivot_columns;
  // Kernel basis: primitive integer vectors, first nonzero entry positive,
  // one per non-pivot column in increasing order.
  std::vector<std::vector<Rat>> kernel;
};

// Fraction-free (Bareiss) elimination on integer-scaled rows.
// Pivot: largest magnitude entry in the column, lowest row index on ties.
Elimination eliminate(const RatMatrix& rows, std::size_t ncols);

int rank_of(const RatMatrix& rows, std::size_t ncols);

RatMatrix identity_matrix(std::size_t n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& v);
RatMatrix mat_inverse(const RatMatrix& a);  // throws on singular input
RatMatrix transpose(const RatMatrix& a);

// Kernel over an arbitrary field K (Gauss–Jordan); used over number fields.
template <class K>
std::vector<std::vector<K>> field_kernel(std::vector<std::vector<K>> a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    K inv = K(1) / a[row][c];
    for (auto& v : a[row]) v = v * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      K f = a[r][c];
      for (std::size_t cc = c; cc < ncols; ++cc) a[r][cc] = a[r][cc] - f * a[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<K>> kernel;
  std::size_t p = 0;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (p < pivots.size() && pivots[p] == free) {
      ++p;
      continue;
    }
    std::vector<K> v(ncols, K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace nodalsplit
