#include "nodalsplit/number_field.hpp"

#include "nodalsplit/factor.hpp"

namespace nodalsplit {

NumberField::NumberField(Private, QPoly minpoly, std::string var)
    : minpoly_(std::move(minpoly)), var_(std::move(var)) {
  int n = minpoly_.degree();
  // a^n = -(c_0 + ... + c_{n-1} a^{n-1})
  std::vector<Rat> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -minpoly_.coeff(i);
  for (int k = 0; k + 1 < n; ++k) {
    reduce_.push_back(cur);
    // multiply by a
    Rat top = cur.back();
    for (int i = n - 1; i > 0; --i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] - top * minpoly_.coeff(i);
    cur[0] = -top * minpoly_.coeff(0);
  }
}

FieldRef NumberField::create(const QPoly& minpoly, std::string var) {
  if (minpoly.degree() < 1)
    throw Error(ErrorCode::kReducibleMinimalPolynomial, "minimal polynomial must have degree >= 1");
  if (!is_irreducible(minpoly))
    throw Error(ErrorCode::kReducibleMinimalPolynomial,
                "minimal polynomial " + to_string(minpoly, var) + " is reducible over Q");
  return create_trusted(minpoly, std::move(var));
}

FieldRef NumberField::create_trusted(const QPoly& minpoly, std::string var) {
  return std::make_shared<const NumberField>(Private{}, minpoly.monic(), std::move(var));
}

NFElem NumberField::gen() const {
  if (degree() == 1) return from_coords({-minpoly_.coeff(0)});
  return from_coords({Rat(0), Rat(1)});
}

NFElem NumberField::from_poly(const QPoly& p) const {
  return from_coords((p % minpoly_).coeffs());
}

NFElem NumberField::from_coords(std::vector<Rat> coords) const {
  coords.resize(static_cast<std::size_t>(degree()));
  return NFElem(shared_from_this(), std::move(coords));
}

std::vector<Rat> NumberField::multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  auto n = static_cast<std::size_t>(degree());
  std::vector<Rat> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  std::vector<Rat> out(prod.begin(), prod.begin() + static_cast<long>(n));
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& red = reduce_[k - n];
    for (std::size_t i = 0; i < n; ++i) out[i] += prod[k] * red[i];
  }
  return out;
}

std::vector<Rat> NumberField::invert(const std::vector<Rat>& a) const {
  QPoly p(a);
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inverse of zero in number field");
  auto eg = ext_gcd(p, minpoly_);
  // s·p + t·m = 1 since m is irreducible
  std::vector<Rat> out = (eg.s % minpoly_).coeffs();
  out.resize(static_cast<std::size_t>(degree()));
  return out;
}

NFElem::NFElem(FieldRef field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
  if (field_) c_.resize(static_cast<std::size_t>(field_->degree()));
  else c_.resize(1);
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  if (!a || !b) return !a && !b;
  return a->same_as(*b);
}

FieldRef common_field(const FieldRef& a, const FieldRef& b) {
  if (!a) return b;
  if (!b) return a;
  if (!a->same_as(*b))
    throw Error(ErrorCode::kFieldMismatch, "elements of Q[" + a->var() + "]/(" +
                                               to_string(a->minpoly(), a->var()) + ") and Q[" + b->var() +
                                               "]/(" + to_string(b->minpoly(), b->var()) + ") do not mix");
  return a;
}

FieldRef common_field(const std::vector<NFElem>& elems) {
  FieldRef f;
  for (const auto& e : elems) f = common_field(f, e.field());
  return f;
}

bool NFElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::kFieldMismatch, "element is not rational: " + to_string());
  return c_[0];
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {
std::vector<Rat> padded(const NFElem& e, std::size_t n) {
  std::vector<Rat> v = e.coords();
  v.resize(n);
  return v;
}
}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
  FieldRef f = common_field(a.field(), b.field());
  std::size_t n = f ? static_cast<std::size_t>(f->degree()) : 1;
  std::vector<Rat> v = padded(a, n);
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return NFElem(f, std::move(v));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  FieldRef f = common_field(a.field(), b.field());
  std::size_t n = f ? static_cast<std::size_t>(f->degree()) : 1;
  std::vector<Rat> v = padded(a, n);
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return NFElem(f, std::move(v));
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  FieldRef f = common_field(a.field(), b.field());
  if (!a.field_ || a.c_.size() == 1) {
    std::vector<Rat> v = b.c_;
    for (auto& c : v) c *= a.c_[0];
    return NFElem(f, std::move(v));
  }
  if (!b.field_ || b.c_.size() == 1) {
    std::vector<Rat> v = a.c_;
    for (auto& c : v) c *= b.c_[0];
    return NFElem(f, std::move(v));
  }
  return NFElem(f, f->multiply(a.c_, b.c_));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  if (!field_ || c_.size() == 1) return NFElem(field_, {c_[0].inverse()});
  return NFElem(field_, field_->invert(c_));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem NFElem::pow(unsigned e) const {
  NFElem r(field_, {Rat(1)}), base = *this;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

QPoly NFElem::minimal_polynomial() const {
  // First linear dependence among 1, e, e², ... in the power basis.
  std::size_t n = c_.size();
  std::vector<std::vector<Rat>> powers;  // coordinate vectors
  NFElem cur(field_, {Rat(1)});
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(padded(cur, n));
    // Solve Σ_{i<k} x_i powers[i] = powers[k].
    std::size_t m = powers.size() - 1;
    if (m > 0) {
      // augmented n × (m+1) system
      std::vector<std::vector<Rat>> a(n, std::vector<Rat>(m + 1));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r][c] = powers[c][r];
        a[r][m] = powers[m][r];
      }
      std::vector<std::size_t> pivcol;
      std::size_t row = 0;
      for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t piv = row;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Rat inv = a[row][c].inverse();
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == row || a[r][c].is_zero()) continue;
          Rat f = a[r][c];
          for (std::size_t cc = c; cc <= m; ++cc) a[r][cc] -= f * a[row][cc];
        }
        pivcol.push_back(c);
        ++row;
      }
      bool consistent = true;
      for (std::size_t r = row; r < n; ++r)
        if (!a[r][m].is_zero()) consistent = false;
      if (consistent) {
        std::vector<Rat> coeffs(m + 1);
        coeffs[m] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) coeffs[pivcol[i]] = -a[i][m];
        return QPoly(coeffs);
      }
    }
    cur = cur * *this;
  }
  throw Error(ErrorCode::kInvalidArgument, "minimal polynomial search failed");
}

std::string NFElem::to_string() const {
  if (!field_) return c_[0].to_string();
  return nodalsplit::to_string(as_poly(), field_->var());
}

}  // namespace nodalsplit
