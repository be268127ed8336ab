#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/rat.hpp"

namespace nodalsplit {

// Dense univariate polynomial over a field K, constant term first.
// K needs +, -, *, /, unary -, is_zero() and construction from int.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const K& c) { return UPoly(std::vector<K>{c}); }
  static UPoly monomial(const K& c, int deg) {
    std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
    v.back() = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0);
  }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const K& s, const UPoly& a) {
    if (s.is_zero()) return UPoly();
    UPoly r = a;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
    return true;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    return inv * *this;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> v(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = K(static_cast<int>(i)) * c_[i];
    return UPoly(std::move(v));
  }

  // Horner evaluation at a value in any ring T that accepts K coefficients.
  template <class T>
  T eval(const T& at) const {
    T acc = T(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + T(c_[i]);
    return acc;
  }

  UPoly compose(const UPoly& inner) const {
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  UPoly pow(unsigned e) const {
    UPoly r = constant(K(1)), b = *this;
    while (e) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<K>(), a};
  std::vector<K> rem = a.coeffs();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K(0));
  K inv = K(1) / b.lead();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const K& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    K f = top * inv;
    q[static_cast<std::size_t>(i - b.degree())] = f;
    for (int j = 0; j <= b.degree(); ++j) {
      auto idx = static_cast<std::size_t>(i - b.degree() + j);
      rem[idx] = rem[idx] - f * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {UPoly<K>(std::move(q)), UPoly<K>(std::move(rem))};
}

template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) {
  return divmod(a, b).second;
}

// Monic gcd; gcd(0,0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s·a + t·b = g monic.
template <class K>
struct ExtGcd {
  UPoly<K> g, s, t;
};

template <class K>
ExtGcd<K> ext_gcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
  UPoly<K> t0, t1 = UPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

// Exact quotient; throws if b does not divide a.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  return q;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

using QPoly = UPoly<Rat>;

std::string to_string(const QPoly& p, const std::string& var = "x");

// Primitive integer polynomial with positive leading coefficient, proportional to p.
std::vector<Integer> primitive_integer_coeffs(const QPoly& p);
QPoly from_integer_coeffs(const std::vector<Integer>& c);

}  // namespace nodalsplit
