#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalsplit/conic.hpp"
#include "nodalsplit/curve.hpp"
#include "nodalsplit/form.hpp"
#include "nodalsplit/linsys.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit {

// g2·w² + 2·g3·w + g4 with g2, g3, g4 plane forms of degrees 2, 3, 4; the
// distinguished node is (0:0:0:1).
struct NodeCenteredQuartic {
  Form g2, g3, g4;
  Form surface() const;  // degree 4 in x, y, z, w
};

// Reads off (g2, g3, g4) from a quartic singular at (0:0:0:1).
// Throws NodeDegenerate when (0:0:0:1) is not a node.
NodeCenteredQuartic node_centered(const Form& f);

struct CenteredSurface {
  NodeCenteredQuartic quartic;
  RatMatrix m;  // new coordinates X' = M·X, with M·P = (0:0:0:1)
};
// Moves the rational node P to (0:0:0:1).
CenteredSurface center_at_node(const Form& f, const ProjPoint& p);

struct QuarticProjection {
  Form gamma;  // g3² − g2·g4
  Form delta;  // g2
  bool reduced = true;                   // squarefree restriction to a test line was found
  std::optional<ContactProfile> contact;  // needs a rational point on g2
};

// Throws NodeDegenerate (rank g2 < 3) or LineThroughNode.
QuarticProjection project_quartic(const NodeCenteredQuartic& x, int height = 50);

// Hyperplane w + ℓ = 0 ↦ g2·ℓ − g3. Throws HyperplaneThroughNode.
Form alpha1_map(const NodeCenteredQuartic& x, const Form& hyperplane);
// Quadric a1·w + a2 = 0 ↦ a1·g3 − a2·g2. Throws QuadricSingularAtNode when a1 = 0.
Form alpha2_map(const NodeCenteredQuartic& x, const Form& a1, const Form& a2);
// Same, from a quadric in x, y, z, w through (0:0:0:1).
Form alpha2_map(const NodeCenteredQuartic& x, const Form& quadric);

NodeCheck verify_surface_node(const Form& f, const ProjPoint& p);

struct GeneralPositionP3 {
  enum class Kind { kGeneral, kCollinearTriple, kCoplanarFive };
  Kind kind = Kind::kGeneral;
  std::vector<std::size_t> indices;
  explicit operator bool() const { return kind == Kind::kGeneral; }
};
const char* to_string(GeneralPositionP3::Kind k);

// Rational points; triples before five-sets, both in lexicographic order.
GeneralPositionP3 general_position_p3(const std::vector<ProjPoint>& points);

struct SyzygeticResult {
  bool syzygetic = false;
  std::vector<std::size_t> subset;   // the assigned nodes
  std::optional<LinSysReport> system;
  // When the kernel is 3-dimensional: f = Σ coeffs[i]·monomial_i(q0,q1,q2), over
  // the ternary quadratic monomials in graded-lex order.
  std::vector<Form> quadrics;
  std::vector<Rat> ternary;
};

SyzygeticResult syzygetic_test(const Form& f, const std::vector<ProjPoint>& nodes);

struct Configuration33 {
  std::vector<std::size_t> nodes;  // six indices
  Form hyperplane;
  Form conic;  // in coordinates of a basis of the hyperplane
};

std::optional<Configuration33> detect_33_configuration(const Form& f, const std::vector<ProjPoint>& nodes,
                                                       std::size_t p0);

// All singular points of the surface are the claimed ones: checked through
// the projection from the first rational claimed node. False means not
// certified; a singular point of the branch curve may also come from elsewhere.
CompletenessResult surface_nodes_complete(const Form& f, const std::vector<ProjPoint>& nodes, int seed = 0);

// A quartic whose projection is c·γ with conic c·q, for γ with q as an even
// contact conic. Not unique.
NodeCenteredQuartic quartic_from_sextic(const Form& gamma, const Form& q, int height = 50);

}  // namespace nodalsplit
