#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalsplit/number_field.hpp"
#include "nodalsplit/rat.hpp"
#include "nodalsplit/upoly.hpp"

namespace nodalsplit {

// Homogeneous form in (s,t); coeff(i) multiplies s^(d-i) t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rat> coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, {}); }
  // F with F(s,1) = p, of the given degree ≥ deg p.
  static BinaryForm homogenize(const QPoly& p, int degree);
  static BinaryForm s_power(int k) { return homogenize(QPoly::monomial(Rat(1), k), k); }
  static BinaryForm t_power(int k);

  int degree() const { return d_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  int t_multiplicity() const;  // largest j with t^j | F
  QPoly dehomogenize() const;  // F(s,1)

  Rat eval(const Rat& s, const Rat& t) const;
  NFElem eval(const NFElem& s, const NFElem& t) const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rat& k, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  BinaryForm pow(unsigned e) const;

  std::string to_string(const std::string& s = "s", const std::string& t = "t") const;

 private:
  int d_ = 0;
  std::vector<Rat> c_ = {Rat(0)};
};

struct BinaryFactor {
  BinaryForm factor;  // monic in s, or exactly t
  int multiplicity;
};

struct BinaryFactorization {
  Rat unit;
  std::vector<BinaryFactor> factors;
};

BinaryFactorization factor_binary_form(const BinaryForm& f);

// F = c·Π P_i^i with P_i squarefree, pairwise coprime, positive degree.
std::vector<BinaryFactor> binary_squarefree_decomposition(const BinaryForm& f);

// Product of the distinct irreducible factors (monic normalization).
BinaryForm binary_radical(const BinaryForm& f);

// G with G·G = F, or nullopt when F is not a square over Q.
std::optional<BinaryForm> binary_form_sqrt(const BinaryForm& f);

// Linear functionals of R (length deg T) that all vanish iff T divides R.
std::vector<Rat> divisibility_residue(const BinaryForm& r, const BinaryForm& t);

}  // namespace nodalsplit
