#include "nodalsplit/binary_form.hpp"

#include <algorithm>

#include "nodalsplit/factor.hpp"

namespace nodalsplit {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : d_(degree), c_(std::move(coeffs)) {
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative binary form degree");
  if (c_.size() > static_cast<std::size_t>(degree) + 1)
    for (std::size_t i = static_cast<std::size_t>(degree) + 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) throw Error(ErrorCode::kDegreeMismatch, "binary form has too many coefficients");
  c_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm BinaryForm::homogenize(const QPoly& p, int degree) {
  if (p.degree() > degree) throw Error(ErrorCode::kDegreeMismatch, "homogenization degree too small");
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(degree - i)] = p.coeff(i);
  return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::t_power(int k) {
  std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
  c.back() = 1;
  return BinaryForm(k, std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

int BinaryForm::t_multiplicity() const {
  int j = 0;
  while (j <= d_ && c_[static_cast<std::size_t>(j)].is_zero()) ++j;
  return j;
}

QPoly BinaryForm::dehomogenize() const {
  std::vector<Rat> p(static_cast<std::size_t>(d_) + 1);
  for (int i = 0; i <= d_; ++i) p[static_cast<std::size_t>(d_ - i)] = c_[static_cast<std::size_t>(i)];
  return QPoly(std::move(p));
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
  Rat acc = 0, tp = 1;
  std::vector<Rat> sp(static_cast<std::size_t>(d_) + 1, Rat(1));
  for (int i = 1; i <= d_; ++i) sp[static_cast<std::size_t>(i)] = sp[static_cast<std::size_t>(i - 1)] * s;
  for (int i = 0; i <= d_; ++i) {
    acc += c_[static_cast<std::size_t>(i)] * sp[static_cast<std::size_t>(d_ - i)] * tp;
    tp *= t;
  }
  return acc;
}

NFElem BinaryForm::eval(const NFElem& s, const NFElem& t) const {
  NFElem acc = 0, tp = 1;
  std::vector<NFElem> sp(static_cast<std::size_t>(d_) + 1, NFElem(1));
  for (int i = 1; i <= d_; ++i) sp[static_cast<std::size_t>(i)] = sp[static_cast<std::size_t>(i - 1)] * s;
  for (int i = 0; i <= d_; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero())
      acc = acc + NFElem(c_[static_cast<std::size_t>(i)]) * sp[static_cast<std::size_t>(d_ - i)] * tp;
    tp = tp * t;
  }
  return acc;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {
void check_same_degree(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw Error(ErrorCode::kDegreeMismatch, "adding binary forms of degrees " + std::to_string(a.degree()) +
                                                " and " + std::to_string(b.degree()));
}
}  // namespace

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  check_same_degree(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rat> c(static_cast<std::size_t>(a.d_ + b.d_) + 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(a.d_ + b.d_, std::move(c));
}

BinaryForm operator*(const Rat& k, const BinaryForm& a) {
  BinaryForm r = a;
  for (auto& c : r.c_) c *= k;
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.d_ == b.d_ && a.c_ == b.c_;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm r(0, {Rat(1)});
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string BinaryForm::to_string(const std::string& s, const std::string& t) const {
  std::string out;
  for (int i = 0; i <= d_; ++i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono;
    auto add = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add(s, d_ - i);
    add(t, i);
    if (mono.empty()) out += a.to_string();
    else if (a.is_one()) out += mono;
    else out += a.to_string() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

BinaryFactorization factor_binary_form(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot factor the zero binary form");
  BinaryFactorization out;
  int j = f.t_multiplicity();
  Factorization fq = upoly_factor(f.dehomogenize());
  out.unit = fq.unit;
  for (const auto& term : fq.factors)
    out.factors.push_back({BinaryForm::homogenize(term.factor, term.factor.degree()), term.multiplicity});
  if (j > 0) out.factors.push_back({BinaryForm::t_power(1), j});
  return out;
}

std::vector<BinaryFactor> binary_squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "squarefree decomposition of zero");
  int j = f.t_multiplicity();
  std::vector<BinaryFactor> out;
  bool placed = (j == 0);
  for (const auto& term : squarefree_decomposition(f.dehomogenize())) {
    BinaryForm p = BinaryForm::homogenize(term.factor, term.factor.degree());
    if (term.multiplicity == j) {
      p = p * BinaryForm::t_power(1);
      placed = true;
    }
    out.push_back({p, term.multiplicity});
  }
  if (!placed) {
    out.push_back({BinaryForm::t_power(1), j});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
  }
  return out;
}

BinaryForm binary_radical(const BinaryForm& f) {
  BinaryForm r(0, {Rat(1)});
  for (const auto& t : binary_squarefree_decomposition(f)) r = r * t.factor;
  return r;
}

std::optional<BinaryForm> binary_form_sqrt(const BinaryForm& f) {
  if (f.degree() % 2 != 0) return std::nullopt;
  int e = f.degree() / 2;
  if (f.is_zero()) return BinaryForm::zero(e);
  int j = f.t_multiplicity();
  if (j % 2 != 0) return std::nullopt;
  const Rat& lead = f.coeff(j);
  if (lead.sign() < 0) return std::nullopt;
  Integer n = lead.num(), d = lead.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  std::vector<Rat> g(static_cast<std::size_t>(e) + 1);
  int h = j / 2;
  g[static_cast<std::size_t>(h)] = Rat(rn, rd);
  Rat twice_inv = (Rat(2) * g[static_cast<std::size_t>(h)]).inverse();
  for (int k = h + 1; k <= e; ++k) {
    // coefficient index h+k of G²: 2·g_h·g_k + Σ_{h<a<k} g_a g_{h+k-a}
    Rat acc = f.coeff(h + k);
    for (int a = h + 1; a < k; ++a) acc -= g[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(h + k - a)];
    g[static_cast<std::size_t>(k)] = acc * twice_inv;
  }
  BinaryForm root(e, std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

std::vector<Rat> divisibility_residue(const BinaryForm& r, const BinaryForm& t) {
  int j = t.t_multiplicity();
  std::vector<Rat> out;
  for (int i = 0; i < j; ++i) out.push_back(i <= r.degree() ? r.coeff(i) : Rat(0));
  QPoly t0 = t.dehomogenize();
  int e0 = t0.degree();
  if (e0 > 0) {
    QPoly rem = r.dehomogenize() % t0;
    for (int i = 0; i < e0; ++i) out.push_back(rem.coeff(i));
  }
  return out;
}

}  // namespace nodalsplit
