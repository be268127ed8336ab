#include "nodalsplit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace nodalsplit {
namespace {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ---------- arithmetic in F_p[x], p < 2^31 ----------

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_sub(const Fp& f, const ZpPoly& a, const ZpPoly& b) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ZpPoly zp_mul(const Fp& f, const ZpPoly& a, const ZpPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<ZpPoly, ZpPoly> zp_divmod(const Fp& f, const ZpPoly& a, const ZpPoly& b) {
  if (deg(a) < deg(b)) return {{}, a};
  ZpPoly rem = a, q(a.size() - b.size() + 1, 0);
  u64 inv = f.inv(b.back());
  for (int i = deg(a); i >= deg(b); --i) {
    u64 top = rem[static_cast<std::size_t>(i)];
    if (!top) continue;
    u64 c = f.mul(top, inv);
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto idx = static_cast<std::size_t>(i - deg(b) + j);
      rem[idx] = f.sub(rem[idx], f.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(q);
  return {q, rem};
}

ZpPoly zp_monic(const Fp& f, ZpPoly a) {
  if (a.empty()) return a;
  u64 inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

ZpPoly zp_gcd(const Fp& f, ZpPoly a, ZpPoly b) {
  while (!b.empty()) {
    ZpPoly r = zp_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(f, a);
}

// s·a + t·b = 1 for coprime a, b.
void zp_ext_gcd(const Fp& f, const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) {
  ZpPoly r0 = a, r1 = b, s0 = {1}, s1, t0, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = zp_divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = zp_sub(f, s0, zp_mul(f, q, s1));
    ZpPoly t2 = zp_sub(f, t0, zp_mul(f, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = f.inv(r0.back());
  s = zp_mul(f, s0, {inv});
  t = zp_mul(f, t0, {inv});
}

ZpPoly zp_deriv(const Fp& f, const ZpPoly& a) {
  ZpPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], i % f.p));
  trim(r);
  return r;
}

ZpPoly zp_powmod(const Fp& f, ZpPoly base, const Integer& e, const ZpPoly& mod) {
  ZpPoly r = {1};
  base = zp_divmod(f, base, mod).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = zp_divmod(f, zp_mul(f, r, r), mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = zp_divmod(f, zp_mul(f, r, base), mod).second;
  }
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ZpPoly, int>> zp_ddf(const Fp& f, ZpPoly a) {
  std::vector<std::pair<ZpPoly, int>> out;
  ZpPoly x = {0, 1}, h = x;
  Integer p(static_cast<unsigned long>(f.p));
  for (int d = 1; 2 * d <= deg(a); ++d) {
    h = zp_powmod(f, h, p, a);
    ZpPoly g = zp_gcd(f, zp_sub(f, h, x), a);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      a = zp_divmod(f, a, g).first;
      h = zp_divmod(f, h, a).second;
    }
  }
  if (deg(a) > 0) out.emplace_back(a, deg(a));
  return out;
}

// Equal-degree splitting (Cantor–Zassenhaus), p odd.
void zp_edf(const Fp& f, const ZpPoly& a, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  if (deg(a) == d) {
    out.push_back(a);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), f.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    ZpPoly r(static_cast<std::size_t>(deg(a)), 0);
    for (auto& c : r) c = rng() % f.p;
    trim(r);
    if (deg(r) < 1) continue;
    ZpPoly b = zp_sub(f, zp_powmod(f, r, e, a), {1});
    ZpPoly g = zp_gcd(f, b, a);
    if (deg(g) > 0 && deg(g) < deg(a)) {
      zp_edf(f, g, d, rng, out);
      zp_edf(f, zp_divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> zp_factor(const Fp& f, const ZpPoly& monic_sqfree) {
  std::mt19937_64 rng(0x5eed0f5eedULL + f.p);
  std::vector<ZpPoly> out;
  for (auto& [g, d] : zp_ddf(f, monic_sqfree)) zp_edf(f, g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------- integer polynomials modulo M ----------

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zm_reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod_pos(c, m);
  ztrim(a);
  return a;
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  return zm_reduce(std::move(r), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  return zm_reduce(std::move(r), m);
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zm_reduce(std::move(r), m);
}

// Division by a monic b modulo m.
std::pair<ZPoly, ZPoly> zm_divmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (zdeg(a) < zdeg(b)) return {{}, a};
  ZPoly rem = a, q(a.size() - b.size() + 1, 0);
  for (int i = zdeg(a); i >= zdeg(b); --i) {
    Integer c = mod_pos(rem[static_cast<std::size_t>(i)], m);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - zdeg(b))] = c;
    for (int j = 0; j <= zdeg(b); ++j) {
      auto idx = static_cast<std::size_t>(i - zdeg(b) + j);
      rem[idx] = mod_pos(rem[idx] - c * b[static_cast<std::size_t>(j)], m);
    }
  }
  rem.resize(b.size() - 1);
  return {zm_reduce(q, m), zm_reduce(rem, m)};
}

ZPoly to_z(const ZpPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZpPoly to_zp(const Fp& f, const ZPoly& a) {
  ZpPoly r;
  Integer p(static_cast<unsigned long>(f.p));
  for (const auto& c : a) r.push_back(mod_pos(c, p).get_ui());
  trim(r);
  return r;
}

struct HenselState {
  ZPoly g, h, s, t;
};

// One quadratic lifting step from modulus m to m² (f ≡ g·h, s·g + t·h ≡ 1, h monic).
HenselState hensel_step(const ZPoly& f, const Integer& m, const HenselState& in) {
  Integer mm = m * m;
  ZPoly e = zm_sub(f, zm_mul(in.g, in.h, mm), mm);
  auto [q, r] = zm_divmod(zm_mul(in.s, e, mm), in.h, mm);
  HenselState out;
  out.g = zm_add(zm_add(in.g, zm_mul(in.t, e, mm), mm), zm_mul(q, in.g, mm), mm);
  out.h = zm_add(in.h, r, mm);
  ZPoly b = zm_sub(zm_add(zm_mul(in.s, out.g, mm), zm_mul(in.t, out.h, mm), mm), {Integer(1)}, mm);
  auto [c, d] = zm_divmod(zm_mul(in.s, b, mm), out.h, mm);
  out.s = zm_sub(in.s, d, mm);
  out.t = zm_sub(zm_sub(in.t, zm_mul(in.t, b, mm), mm), zm_mul(c, out.g, mm), mm);
  return out;
}

// Lifts f ≡ lc(f)·Π factors (mod p) to monic factors modulo p^(2^steps).
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<ZpPoly>& factors, const Fp& fp,
                              int steps) {
  Integer p(static_cast<unsigned long>(fp.p));
  Integer big = p;
  for (int i = 0; i < steps; ++i) big *= big;
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = mod_pos(f.back(), big);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), big.get_mpz_t());
    return {zm_mul(f, {inv}, big)};
  }
  std::size_t half = factors.size() / 2;
  std::vector<ZpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ZpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ZpPoly g0 = to_zp(fp, ZPoly{f.back()});
  for (const auto& a : left) g0 = zp_mul(fp, g0, a);
  ZpPoly h0 = {1};
  for (const auto& a : right) h0 = zp_mul(fp, h0, a);
  ZpPoly s0, t0;
  zp_ext_gcd(fp, g0, h0, s0, t0);
  HenselState st{to_z(g0), to_z(h0), to_z(s0), to_z(t0)};
  Integer m = p;
  for (int i = 0; i < steps; ++i) {
    st = hensel_step(f, m, st);
    m *= m;
  }
  auto a = multi_lift(st.g, left, fp, steps);
  auto b = multi_lift(st.h, right, fp, steps);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<unsigned> small_primes(unsigned limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<unsigned> out;
  for (unsigned i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (unsigned j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer g = content(a);
  if (g != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact division over Z; empty optional-like flag on failure.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (zdeg(a) < zdeg(b)) return false;
  ZPoly rem = a, q(a.size() - b.size() + 1, 0);
  for (int i = zdeg(a); i >= zdeg(b); --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = top / b.back();
    q[static_cast<std::size_t>(i - zdeg(b))] = c;
    for (int j = 0; j <= zdeg(b); ++j)
      rem[static_cast<std::size_t>(i - zdeg(b) + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  ztrim(q);
  quotient = std::move(q);
  return true;
}

// Irreducible primitive factors of a primitive squarefree G with deg ≥ 1.
std::vector<ZPoly> zassenhaus(ZPoly g) {
  if (zdeg(g) <= 1) return {g};
  static const std::vector<unsigned> primes = small_primes(20000);
  // Pick the prime with fewest modular factors among the first few good ones.
  Fp best{0};
  std::vector<ZpPoly> best_factors;
  int good = 0;
  for (unsigned p : primes) {
    if (p == 2) continue;
    Fp fp{p};
    ZpPoly gp = to_zp(fp, g);
    if (deg(gp) != zdeg(g)) continue;
    if (deg(zp_gcd(fp, gp, zp_deriv(fp, gp))) != 0) continue;
    auto fs = zp_factor(fp, zp_monic(fp, gp));
    if (best.p == 0 || fs.size() < best_factors.size()) {
      best = fp;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1 || ++good >= 5) break;
  }
  if (best.p == 0) throw Error(ErrorCode::kInvalidArgument, "no good reduction prime found");
  if (best_factors.size() == 1) return {g};

  // Coefficient bound for factors of lc·G: |lc|·2^n·||G||₂.
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(g.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(g)));
  Integer target = 2 * bound + 1;
  Integer p(static_cast<unsigned long>(best.p));
  Integer m = p;
  int steps = 0;
  while (m <= target) {
    m *= m;
    ++steps;
  }
  std::vector<ZPoly> lifted = multi_lift(g, best_factors, best, steps);
  Integer half = m / 2;

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand = {mod_pos(g.back(), m)};
      for (std::size_t i : idx) cand = zm_mul(cand, lifted[remaining[i]], m);
      for (auto& c : cand)
        if (c > half) c -= m;
      cand = primitive(cand);
      ZPoly quotient;
      if (z_divides(g, cand, quotient)) {
        result.push_back(cand);
        g = quotient;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
        remaining = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(g) > 0) result.push_back(primitive(g));
  return result;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm_of_denominators_acc(l, c);
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
  return primitive(z);
}

QPoly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rat> v(c.begin(), c.end());
  return QPoly(std::move(v));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (i == 0) {
      out += a.to_string();
      continue;
    }
    if (!a.is_one()) out += a.to_string() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly Factorization::expand() const {
  QPoly r = QPoly::constant(unit);
  for (const auto& t : factors) r = r * t.factor.pow(static_cast<unsigned>(t.multiplicity));
  return r;
}

std::vector<FactorTerm<Rat>> squarefree_decomposition(const QPoly& p) {
  std::vector<FactorTerm<Rat>> out;
  if (p.degree() <= 0) return out;
  QPoly f = p.monic();
  QPoly d = f.derivative();
  QPoly a = gcd(f, d);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(d, a);
  QPoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, dd);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(dd, a);
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

Factorization upoly_factor(const QPoly& p, int max_degree) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot factor the zero polynomial");
  if (p.degree() > max_degree)
    throw Error(ErrorCode::kDegreeTooLarge, "degree " + std::to_string(p.degree()) +
                                                " exceeds factorization bound " +
                                                std::to_string(max_degree));
  Factorization out{p.lead(), {}};
  for (const auto& term : squarefree_decomposition(p)) {
    for (const auto& z : zassenhaus(primitive_integer_coeffs(term.factor)))
      out.factors.push_back({from_integer_coeffs(z).monic(), term.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return poly_less(a.factor, b.factor);
  });
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() <= 0) return false;
  auto f = upoly_factor(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly out;
  for (std::size_t k = n; k-- > 0;) {
    out = out * QPoly{-xs[k], Rat(1)} + QPoly::constant(dd[k]);
  }
  return out;
}

namespace {

Rat norm_of(const NFElem& e, const FieldRef& k) {
  int n = k->degree();
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  NFElem power = k->from_coords(std::vector<Rat>{Rat(1)});
  NFElem gen = k->gen();
  for (int j = 0; j < n; ++j) {
    NFElem col = e * power;
    std::vector<Rat> cc = col.coords();
    cc.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cc[static_cast<std::size_t>(i)];
    power = power * gen;
  }
  return determinant(m);
}

UPoly<NFElem> lift_q(const QPoly& p) {
  std::vector<NFElem> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return UPoly<NFElem>(std::move(v));
}

}  // namespace

std::vector<FactorTerm<NFElem>> factor_over_field(const UPoly<NFElem>& f, const FieldRef& k,
                                                  int max_degree) {
  std::vector<FactorTerm<NFElem>> out;
  if (f.degree() <= 0) return out;
  if (!k || k->degree() == 1) {
    std::vector<Rat> c;
    for (const auto& e : f.coeffs()) c.push_back(e.rational_value());
    for (const auto& t : upoly_factor(QPoly(c), max_degree).factors) out.push_back({lift_q(t.factor), t.multiplicity});
    return out;
  }
  int n = k->degree();
  // Yun over K.
  std::vector<FactorTerm<NFElem>> sqf;
  {
    UPoly<NFElem> g = f.monic(), d = g.derivative();
    UPoly<NFElem> a = gcd(g, d), b = exact_div(g, a), c = exact_div(d, a);
    UPoly<NFElem> dd = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
      a = gcd(b, dd);
      if (a.degree() > 0) sqf.push_back({a, i});
      b = exact_div(b, a);
      c = exact_div(dd, a);
      dd = c - b.derivative();
      ++i;
    }
  }
  NFElem theta = k->gen();
  for (const auto& [g, mult] : sqf) {
    if (g.degree() == 1) {
      out.push_back({g, mult});
      continue;
    }
    int ndeg = n * g.degree();
    if (ndeg > max_degree)
      throw Error(ErrorCode::kDegreeTooLarge, "norm degree " + std::to_string(ndeg) + " exceeds bound");
    for (int attempt = 0;; ++attempt) {
      int shift = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
      NFElem ks = NFElem(Rat(shift)) * theta;
      UPoly<NFElem> shifted = g.compose(UPoly<NFElem>{-ks, NFElem(1)});
      std::vector<Rat> xs, ys;
      for (int j = 0; j <= ndeg; ++j) {
        xs.emplace_back(j);
        ys.push_back(norm_of(shifted.eval(NFElem(Rat(j))), k));
      }
      QPoly norm = interpolate(xs, ys);
      if (gcd(norm, norm.derivative()).degree() > 0) continue;
      for (const auto& t : upoly_factor(norm, max_degree).factors) {
        UPoly<NFElem> back = lift_q(t.factor).compose(UPoly<NFElem>{ks, NFElem(1)});
        UPoly<NFElem> h = gcd(g, back);
        if (h.degree() > 0) out.push_back({h, mult});
      }
      break;
    }
  }
  return out;
}

std::pair<Integer, Integer> split_square_factor(const Integer& n) {
  if (n == 0) return {Integer(1), Integer(0)};
  Integer q = 1, m = n < 0 ? Integer(-1) : Integer(1);
  Integer r = abs(n);
  static const std::vector<unsigned> primes = small_primes(20000);
  for (unsigned p : primes) {
    if (r == 1) break;
    int e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      r /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) q *= p;
    if (e % 2) m *= p;
  }
  if (r != 1) {
    if (mpz_perfect_square_p(r.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
      q *= s;
    } else {
      m *= r;
    }
  }
  return {q, m};
}

}  // namespace nodalsplit
