#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nodalsplit/rat.hpp"
#include "nodalsplit/upoly.hpp"

namespace nodalsplit {

class NumberField;
class NFElem;
using FieldRef = std::shared_ptr<const NumberField>;

// Q[a]/(p) for monic irreducible p.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Makes p monic and verifies irreducibility; throws ReducibleMinimalPolynomial.
  static FieldRef create(const QPoly& minpoly, std::string var = "a");
  // Skips the irreducibility check; for callers that just factored p.
  static FieldRef create_trusted(const QPoly& minpoly, std::string var = "a");

  int degree() const { return minpoly_.degree(); }
  const QPoly& minpoly() const { return minpoly_; }
  const std::string& var() const { return var_; }

  NFElem gen() const;
  NFElem from_poly(const QPoly& p) const;
  NFElem from_coords(std::vector<Rat> coords) const;

  std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> invert(const std::vector<Rat>& a) const;

  bool same_as(const NumberField& other) const {
    return this == &other || minpoly_ == other.minpoly_;
  }

  struct Private {};
  NumberField(Private, QPoly minpoly, std::string var);

 private:
  QPoly minpoly_;
  std::string var_;
  // reduce_[k] = a^(n+k) in the power basis, k = 0..n-2
  std::vector<std::vector<Rat>> reduce_;
};

// Element of a number field, or a plain rational when field() is null.
// Rationals combine freely with any field; two distinct fields never mix.
class NFElem {
 public:
  NFElem() : c_{Rat(0)} {}
  NFElem(int v) : c_{Rat(v)} {}          // NOLINT(google-explicit-constructor)
  NFElem(const Rat& v) : c_{v} {}        // NOLINT(google-explicit-constructor)
  NFElem(FieldRef field, std::vector<Rat> coords);

  const FieldRef& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  // The element as a polynomial in the generator.
  QPoly as_poly() const { return QPoly(c_); }

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
  NFElem inverse() const;
  NFElem pow(unsigned e) const;

  // Monic minimal polynomial over Q.
  QPoly minimal_polynomial() const;
  std::string to_string() const;

 private:
  FieldRef field_;
  std::vector<Rat> c_;
};

// Joint field of a list of elements; null if all rational. Throws FieldMismatch.
FieldRef common_field(const std::vector<NFElem>& elems);
FieldRef common_field(const FieldRef& a, const FieldRef& b);
bool same_field(const FieldRef& a, const FieldRef& b);

}  // namespace nodalsplit
