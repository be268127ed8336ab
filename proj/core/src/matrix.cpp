#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

namespace {

std::vector<std::vector<Integer>> integer_rows(const RatMatrix& rows, std::size_t ncols) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::kInvalidArgument, "condition row length mismatch");
    Integer l = 1;
    for (const auto& c : r) l = lcm_of_denominators_acc(l, c);
    std::vector<Integer> z;
    z.reserve(ncols);
    for (const auto& c : r) z.push_back(c.num() * (l / c.den()));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<Rat> primitive_vector(std::vector<Rat> v) {
  Integer l = 1, g = 0;
  for (const auto& c : v) l = lcm_of_denominators_acc(l, c);
  for (const auto& c : v) {
    Integer n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  Rat k(l, g);
  for (const auto& c : v)
    if (!c.is_zero()) {
      if (c.sign() < 0) k = -k;
      break;
    }
  for (auto& c : v) c *= k;
  return v;
}

}  // namespace

Elimination eliminate(const RatMatrix& rows, std::size_t ncols) {
  auto a = integer_rows(rows, ncols);
  Elimination out;
  std::size_t m = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i) {
      if (a[i][c] == 0) continue;
      if (piv == m || cmp_abs(a[i][c], a[piv][c]) > 0) piv = i;
    }
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = static_cast<int>(r);

  // Back substitution over Q on the echelon form.
  std::size_t p = 0;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (p < out.pivot_columns.size() && out.pivot_columns[p] == free) {
      ++p;
      continue;
    }
    std::vector<Rat> v(ncols);
    v[free] = 1;
    for (std::size_t k = out.pivot_columns.size(); k-- > 0;) {
      std::size_t pc = out.pivot_columns[k];
      if (pc > free) continue;
      Rat acc = 0;
      for (std::size_t j = pc + 1; j < ncols; ++j)
        if (!v[j].is_zero() && a[k][j] != 0) acc += Rat(a[k][j]) * v[j];
      v[pc] = -acc / Rat(a[k][pc]);
    }
    out.kernel.push_back(primitive_vector(std::move(v)));
  }
  return out;
}

int rank_of(const RatMatrix& rows, std::size_t ncols) { return eliminate(rows, ncols).rank; }

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.size(), std::vector<Rat>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& v) {
  std::vector<Rat> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), std::vector<Rat>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMatrix mat_inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix m = a, inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::kInvalidArgument, "singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rat k = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= k;
      inv[c][j] *= k;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace nodalsplit
