#pragma once

#include <string>
#include <vector>

#include "nodalsplit/form.hpp"
#include "nodalsplit/number_field.hpp"

namespace nodalsplit {

using RatMatrix = std::vector<std::vector<Rat>>;

// Projective point over Q or one number field. A point over Q(a) of degree e
// stands for its whole conjugate orbit of e points.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const std::vector<Rat>& coords);
  explicit ProjPoint(std::vector<NFElem> coords);
  static ProjPoint of(std::initializer_list<long> coords);

  const FieldRef& field() const { return field_; }
  const std::vector<NFElem>& coords() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_rational() const { return !field_ || field_->degree() == 1; }
  std::vector<Rat> rational_coords() const;
  int orbit_size() const { return field_ ? field_->degree() : 1; }

  // Same point up to a nonzero scalar.
  bool equals(const ProjPoint& other) const;
  // M·P.
  ProjPoint transformed(const RatMatrix& m) const;
  // Last nonzero coordinate scaled to 1.
  ProjPoint normalized() const;

  std::string to_string() const;

 private:
  FieldRef field_;
  std::vector<NFElem> c_;
};

NFElem eval_form(const Form& f, const ProjPoint& p);
bool vanishes_at(const Form& f, const ProjPoint& p);

// Rows over Q expressing Σ_m c_m·values[m] = 0 for rational unknowns c_m:
// one row per power-basis coordinate of the common field.
RatMatrix rational_rows(const std::vector<NFElem>& values);

}  // namespace nodalsplit
