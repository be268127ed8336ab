#pragma once

#include <string>
#include <vector>

#include "nodalsplit/form.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit {

struct NodeCheck {
  bool on_curve = false;
  bool singular = false;
  bool node = false;
  NFElem discriminant;  // H_ab² − H_aa·H_bb in the chart of the last nonzero coordinate
};

// Works for plane curves and (with a 3×3 Hessian) for surfaces in P³.
NodeCheck verify_node(const Form& f, const ProjPoint& p);

// Deterministic invertible integer 3×3 matrices, index ≥ 0.
RatMatrix shear_matrix(int index);

struct CompletenessResult {
  bool complete = false;
  int shear_index = -1;   // shear that produced the verdict
  std::string reason;     // empty when complete
};

// Decides whether the claimed orbits are the whole singular locus of the
// plane curve. Each claimed orbit must consist of singular points. Tries
// shears seed, seed+1, ..., seed+19; throws ShearExhausted if none is usable.
CompletenessResult check_singular_locus(const Form& gamma, const std::vector<ProjPoint>& claimed, int seed = 0);
bool singular_locus_complete(const Form& gamma, const std::vector<ProjPoint>& claimed, int seed = 0);

// Nodal sextic with r ≤ 7 nodes: irreducible iff no line passes through 5 nodes.
// Throws TooManyNodes for r > 7.
bool irreducibility_sextic(const Form& gamma, const std::vector<ProjPoint>& nodes);

// True when the restriction to one of a few fixed lines is squarefree, which
// certifies that the curve has no multiple component. False is a strong hint
// of non-reducedness, not a proof.
bool reduced_by_line_test(const Form& gamma);

// Bivariate polynomial as coefficients in y (index = power), each a polynomial in x.
using BiPoly = std::vector<QPoly>;
BiPoly affine_chart(const Form& f);  // f(x, y, 1)
// Res_y(a, b) computed by evaluation at deg_x bound + 1 points and interpolation.
QPoly resultant_y(const BiPoly& a, const BiPoly& b, int total_degree_a, int total_degree_b);

}  // namespace nodalsplit
