#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nodalsplit/binary_form.hpp"
#include "nodalsplit/conic.hpp"
#include "nodalsplit/form.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit {

// Forms of one degree on P², P³, or bihomogeneous forms on P¹×P¹.
struct FormSpace {
  enum class Kind { kPlane, kSpace, kBi };
  Kind kind = Kind::kPlane;
  int d1 = 0, d2 = 0;  // degree, or bidegree for kBi
  std::vector<Exponent> basis;

  static FormSpace plane(int degree);
  static FormSpace space(int degree);
  static FormSpace bi(int d1, int d2);

  std::size_t size() const { return basis.size(); }
  std::string describe() const;
  Form form(const std::vector<Rat>& coeffs) const;      // plane or space
  BiForm biform(const std::vector<Rat>& coeffs) const;  // bi
};

struct LinCondition {
  std::string label;
  RatMatrix rows;  // each row has space.size() entries
};

// Vanishing at P (or its whole orbit).
LinCondition cond_point(const FormSpace& space, const ProjPoint& p);
// Vanishing to order 2 at P: all first partials vanish.
LinCondition cond_singular(const FormSpace& space, const ProjPoint& p);
// Restriction to the parametrized conic divisible by T.
LinCondition cond_divisible_on_conic(const FormSpace& space, const ConicParam& param, const BinaryForm& t);
// Vanishing at a point of P¹×P¹ given as ((s:t), (u:v)).
LinCondition cond_bipoint(const FormSpace& space, const ProjPoint& st, const ProjPoint& uv);

struct LinSysReport {
  FormSpace space;
  std::size_t equations = 0;
  int rank = 0;
  int dimension = 0;  // projective: (basis size − rank) − 1, so −1 means empty
  std::vector<std::vector<Rat>> kernel;
  std::vector<std::string> labels;
};

LinSysReport system_solve(const FormSpace& space, const std::vector<LinCondition>& conditions);

// Distinct rational points ((s:t), (u:v)): at most two in any fiber of either
// ruling and no five on one (1,1)-curve.
bool general_position_p1xp1(const std::vector<std::pair<ProjPoint, ProjPoint>>& points);

}  // namespace nodalsplit
