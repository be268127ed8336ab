#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nodalsplit/number_field.hpp"
#include "nodalsplit/rat.hpp"

namespace nodalsplit {

using Exponent = std::array<std::uint16_t, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

// Graded lex, larger monomials first: x^2 > x*y > x*z > y^2 > ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

using TermMap = std::map<Exponent, Rat, GrlexGreater>;

const std::vector<std::string>& plane_vars();  // x, y, z
const std::vector<std::string>& space_vars();  // x, y, z, w

class BiForm;

// Homogeneous form over Q in 3 or 4 named variables.
class Form {
 public:
  Form() : Form(plane_vars(), 0) {}
  Form(std::vector<std::string> vars, int degree, TermMap terms = {});

  static Form constant(const std::vector<std::string>& vars, const Rat& c);
  static Form variable(const std::vector<std::string>& vars, int index);
  static Form monomial(const std::vector<std::string>& vars, const Exponent& e, const Rat& c = Rat(1));
  // Σ coeffs[i]·basis[i] over a list of same-degree exponents.
  static Form from_coefficients(const std::vector<std::string>& vars, int degree,
                                const std::vector<Exponent>& basis, const std::vector<Rat>& coeffs);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponent& e) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(const Rat& k, const Form& a);
  friend bool operator==(const Form& a, const Form& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.is_zero());
  }
  Form pow(unsigned e) const;

  Form partial(int var) const;
  std::vector<Form> partials() const;

  // Ring homomorphism x_i ↦ images[i]; all images share one degree.
  Form substitute(const std::vector<Form>& images) const;
  BiForm substitute(const std::vector<BiForm>& images) const;
  // f(M·X): variable i ↦ Σ_j M[i][j]·x_j.
  Form linear_change(const std::vector<std::vector<Rat>>& m) const;

  Rat eval(const std::vector<Rat>& at) const;
  NFElem eval(const std::vector<NFElem>& at) const;

  // Integer coefficients with gcd 1 and positive leading coefficient.
  Form primitive() const;
  // *this == ratio·other for some nonzero ratio (both nonzero).
  bool proportional_to(const Form& other, Rat* ratio = nullptr) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  int degree_;
  TermMap terms_;
};

// Bihomogeneous form on P¹×P¹ in (s,t; u,v).
class BiForm {
 public:
  BiForm() = default;
  BiForm(int d1, int d2, TermMap terms = {});

  static BiForm variable(int index);  // 0..3 = s,t,u,v
  static BiForm constant(const Rat& c) { return BiForm(0, 0, {{Exponent{0, 0, 0, 0}, c}}); }
  static BiForm from_coefficients(int d1, int d2, const std::vector<Exponent>& basis,
                                  const std::vector<Rat>& coeffs);

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponent& e) const;

  BiForm operator-() const;
  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend BiForm operator*(const Rat& k, const BiForm& a);
  friend bool operator==(const BiForm& a, const BiForm& b) {
    return a.terms_ == b.terms_ && ((a.d1_ == b.d1_ && a.d2_ == b.d2_) || a.is_zero());
  }
  BiForm pow(unsigned e) const;

  // (s,t) ↔ (u,v).
  BiForm swap_factors() const;
  Rat eval(const Rat& s, const Rat& t, const Rat& u, const Rat& v) const;
  bool proportional_to(const BiForm& other, Rat* ratio = nullptr) const;
  std::string to_string() const;

 private:
  int d1_ = 0, d2_ = 0;
  TermMap terms_;
};

// Monomials of degree d in n variables, graded-lex descending.
std::vector<Exponent> monomial_basis(int nvars, int degree);
// s^a t^(d1-a) u^b v^(d2-b), ordered as the term map orders them.
std::vector<Exponent> bimonomial_basis(int d1, int d2);

// Text grammar: rational literals, declared variable names, + - * ^, parentheses,
// implicit product after a coefficient or between variables ("4xy").
Form parse_form(const std::string& text, const std::vector<std::string>& vars);
// Same grammar, no homogeneity requirement; single variable.
std::vector<Rat> parse_univariate(const std::string& text, const std::string& var);

}  // namespace nodalsplit
