#include "nodalsplit/form.hpp"

#include <algorithm>

#include "nodalsplit/errors.hpp"

namespace nodalsplit {

const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v = {"x", "y", "z"};
  return v;
}

const std::vector<std::string>& space_vars() {
  static const std::vector<std::string> v = {"x", "y", "z", "w"};
  return v;
}

namespace {

void add_term(TermMap& m, const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

TermMap mul_terms(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e;
      for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)]);
      add_term(out, e, ca * cb);
    }
  return out;
}

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string terms_string(const TermMap& terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono = monomial_string(e, names);
    if (mono.empty()) out += a.to_string();
    else if (a.is_one()) out += mono;
    else out += a.to_string() + "*" + mono;
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> power_table(const std::vector<T>& base, int maxdeg, const T& one) {
  std::vector<std::vector<T>> p(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    p[i].push_back(one);
    for (int k = 1; k <= maxdeg; ++k) p[i].push_back(p[i].back() * base[i]);
  }
  return p;
}

bool proportional_terms(const TermMap& a, const TermMap& b, Rat* ratio) {
  if (a.empty() || b.empty() || a.size() != b.size()) return false;
  Rat k = a.begin()->second / b.begin()->second;
  auto ib = b.begin();
  for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != k * ib->second) return false;
  }
  if (ratio) *ratio = k;
  return true;
}

}  // namespace

Form::Form(std::vector<std::string> vars, int degree, TermMap terms)
    : vars_(std::move(vars)), degree_(degree) {
  if (vars_.size() != 3 && vars_.size() != 4)
    throw Error(ErrorCode::kInvalidArgument, "forms have 3 or 4 variables");
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    if (total_degree(e) != degree || (vars_.size() == 3 && e[3] != 0))
      throw Error(ErrorCode::kNotHomogeneous, "term of wrong degree in a degree-" + std::to_string(degree) + " form");
    terms_.emplace(e, c);
  }
}

Form Form::constant(const std::vector<std::string>& vars, const Rat& c) {
  return Form(vars, 0, {{Exponent{0, 0, 0, 0}, c}});
}

Form Form::variable(const std::vector<std::string>& vars, int index) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return Form(vars, 1, {{e, Rat(1)}});
}

Form Form::monomial(const std::vector<std::string>& vars, const Exponent& e, const Rat& c) {
  return Form(vars, total_degree(e), {{e, c}});
}

Form Form::from_coefficients(const std::vector<std::string>& vars, int degree,
                             const std::vector<Exponent>& basis, const std::vector<Rat>& coeffs) {
  TermMap t;
  for (std::size_t i = 0; i < basis.size(); ++i) add_term(t, basis[i], coeffs[i]);
  return Form(vars, degree, std::move(t));
}

Rat Form::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (vars_ != o.vars_) throw Error(ErrorCode::kInvalidArgument, "adding forms over different variables");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (degree_ != o.degree_) {
    throw Error(ErrorCode::kDegreeMismatch, "adding forms of degrees " + std::to_string(degree_) + " and " +
                                                std::to_string(o.degree_));
  }
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Form& a, const Form& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorCode::kInvalidArgument, "multiplying forms over different variables");
  return Form(a.vars_, a.degree_ + b.degree_, mul_terms(a.terms_, b.terms_));
}

Form operator*(const Rat& k, const Form& a) {
  if (k.is_zero()) return Form(a.vars_, a.degree_);
  Form r = a;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

Form Form::pow(unsigned e) const {
  Form r = constant(vars_, Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Form Form::partial(int var) const {
  if (degree_ == 0) return Form(vars_, 0);
  TermMap t;
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    add_term(t, f, c * Rat(static_cast<int>(e[v])));
  }
  return Form(vars_, degree_ - 1, std::move(t));
}

std::vector<Form> Form::partials() const {
  std::vector<Form> out;
  for (int i = 0; i < nvars(); ++i) out.push_back(partial(i));
  return out;
}

Form Form::substitute(const std::vector<Form>& images) const {
  if (images.size() != vars_.size())
    throw Error(ErrorCode::kInvalidArgument, "substitution needs one image per variable");
  int d = images[0].degree();
  for (const auto& im : images)
    if (im.degree() != d || im.vars() != images[0].vars())
      throw Error(ErrorCode::kInhomogeneousImage, "substitution images must share variables and degree");
  Form one = Form::constant(images[0].vars(), Rat(1));
  auto pw = power_table(images, degree_, one);
  Form out(images[0].vars(), d * degree_);
  for (const auto& [e, c] : terms_) {
    Form m = one;
    for (std::size_t i = 0; i < vars_.size(); ++i) m = m * pw[i][e[i]];
    out += c * m;
  }
  return out;
}

BiForm Form::substitute(const std::vector<BiForm>& images) const {
  if (images.size() != vars_.size())
    throw Error(ErrorCode::kInvalidArgument, "substitution needs one image per variable");
  int d1 = images[0].d1(), d2 = images[0].d2();
  for (const auto& im : images)
    if (im.d1() != d1 || im.d2() != d2)
      throw Error(ErrorCode::kInhomogeneousImage, "substitution images must share a bidegree");
  BiForm one = BiForm::constant(Rat(1));
  auto pw = power_table(images, degree_, one);
  BiForm out(d1 * degree_, d2 * degree_);
  for (const auto& [e, c] : terms_) {
    BiForm m = one;
    for (std::size_t i = 0; i < vars_.size(); ++i) m = m * pw[i][e[i]];
    out += c * m;
  }
  return out;
}

Form Form::linear_change(const std::vector<std::vector<Rat>>& m) const {
  std::vector<Form> images;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    Form li(vars_, 1);
    for (std::size_t j = 0; j < vars_.size(); ++j)
      li += m[i][j] * Form::variable(vars_, static_cast<int>(j));
    images.push_back(li);
  }
  return substitute(images);
}

Rat Form::eval(const std::vector<Rat>& at) const {
  auto pw = power_table(at, degree_, Rat(1));
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) m *= pw[i][e[i]];
    acc += m;
  }
  return acc;
}

NFElem Form::eval(const std::vector<NFElem>& at) const {
  FieldRef f = common_field(at);
  if (at.size() != vars_.size()) throw Error(ErrorCode::kInvalidArgument, "point dimension does not match form");
  auto pw = power_table(at, degree_, NFElem(1));
  NFElem acc = f ? f->from_coords({}) : NFElem(0);
  for (const auto& [e, c] : terms_) {
    NFElem m = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i]) m = m * pw[i][e[i]];
    acc = acc + m;
  }
  return acc;
}

Form Form::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : terms_) l = lcm_of_denominators_acc(l, c);
  for (const auto& [e, c] : terms_) {
    Integer v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat k(l, g);
  if (terms_.begin()->second.sign() < 0) k = -k;
  return k * *this;
}

bool Form::proportional_to(const Form& other, Rat* ratio) const {
  return vars_ == other.vars_ && proportional_terms(terms_, other.terms_, ratio);
}

std::string Form::to_string() const { return terms_string(terms_, vars_); }

BiForm::BiForm(int d1, int d2, TermMap terms) : d1_(d1), d2_(d2) {
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    if (e[0] + e[1] != d1 || e[2] + e[3] != d2)
      throw Error(ErrorCode::kNotHomogeneous, "term of wrong bidegree");
    terms_.emplace(e, c);
  }
}

BiForm BiForm::variable(int index) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return index < 2 ? BiForm(1, 0, {{e, Rat(1)}}) : BiForm(0, 1, {{e, Rat(1)}});
}

BiForm BiForm::from_coefficients(int d1, int d2, const std::vector<Exponent>& basis,
                                 const std::vector<Rat>& coeffs) {
  TermMap t;
  for (std::size_t i = 0; i < basis.size(); ++i) add_term(t, basis[i], coeffs[i]);
  return BiForm(d1, d2, std::move(t));
}

Rat BiForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

BiForm BiForm::operator-() const {
  BiForm r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiForm& BiForm::operator+=(const BiForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    d1_ = o.d1_;
    d2_ = o.d2_;
  } else if (d1_ != o.d1_ || d2_ != o.d2_) {
    throw Error(ErrorCode::kDegreeMismatch, "adding biforms of different bidegrees");
  }
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) { return *this += -o; }

BiForm operator*(const BiForm& a, const BiForm& b) {
  return BiForm(a.d1_ + b.d1_, a.d2_ + b.d2_, mul_terms(a.terms_, b.terms_));
}

BiForm operator*(const Rat& k, const BiForm& a) {
  if (k.is_zero()) return BiForm(a.d1_, a.d2_);
  BiForm r = a;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

BiForm BiForm::pow(unsigned e) const {
  BiForm r = constant(Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiForm BiForm::swap_factors() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e[2], e[3], e[0], e[1]}, c);
  return BiForm(d2_, d1_, std::move(t));
}

Rat BiForm::eval(const Rat& s, const Rat& t, const Rat& u, const Rat& v) const {
  auto pw = power_table(std::vector<Rat>{s, t, u, v}, std::max(d1_, d2_), Rat(1));
  Rat acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
  return acc;
}

bool BiForm::proportional_to(const BiForm& other, Rat* ratio) const {
  return proportional_terms(terms_, other.terms_, ratio);
}

std::string BiForm::to_string() const {
  static const std::vector<std::string> names = {"s", "t", "u", "v"};
  return terms_string(terms_, names);
}

std::vector<Exponent> monomial_basis(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars == 3) {
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b)
        out.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                       static_cast<std::uint16_t>(degree - a - b), 0});
  } else if (nvars == 4) {
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b)
        for (int c = degree - a - b; c >= 0; --c)
          out.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c),
                         static_cast<std::uint16_t>(degree - a - b - c)});
  } else {
    throw Error(ErrorCode::kInvalidArgument, "monomial basis needs 3 or 4 variables");
  }
  return out;
}

std::vector<Exponent> bimonomial_basis(int d1, int d2) {
  std::vector<Exponent> out;
  for (int a = d1; a >= 0; --a)
    for (int b = d2; b >= 0; --b)
      out.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(d1 - a), static_cast<std::uint16_t>(b),
                     static_cast<std::uint16_t>(d2 - b)});
  return out;
}

}  // namespace nodalsplit
