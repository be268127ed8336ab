#include <gtest/gtest.h>

#include <functional>

#include "nodalsplit/conic.hpp"
#include "nodalsplit/curve.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/linsys.hpp"
#include "nodalsplit/quartic.hpp"
#include "testing.hpp"

namespace nodalsplit {
namespace {

using test::plane;
using test::space;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

// T | R for binary forms: the affine parts divide and t divides R often enough.
bool binary_divides(const BinaryForm& t, const BinaryForm& r) {
  if (r.is_zero()) return true;
  if (t.t_multiplicity() > r.t_multiplicity()) return false;
  return (r.dehomogenize() % t.dehomogenize()).is_zero();
}

// The α maps must produce curves through the tangent points of Δ and Γ.
bool passes_contact_divisor(const NodeCenteredQuartic& x, const Form& curve) {
  ContactProfile prof = contact_profile(x.g3 * x.g3 - x.g2 * x.g4, x.g2, ConicParam::standard());
  return binary_divides(prof.contact_form, restrict_to_conic(curve, ConicParam::standard()));
}

NodeCenteredQuartic surface_quartic() { return node_centered(test::surface_example("split7-24").surface); }

TEST(NodeCentered, SyzygeticSurfaceExpansion) {
  NodeCenteredQuartic x = surface_quartic();
  Form a2 = plane("-y^2+z^2"), b2 = plane("-x^2+z^2"), c2 = plane("-x^2+y^2");
  EXPECT_EQ(x.g2, plane("z^2-4*x*y"));
  EXPECT_EQ(x.g3, plane("z") * c2 - Rat(2) * plane("x") * b2 - Rat(2) * plane("y") * a2);
  EXPECT_EQ(x.g4, c2 * c2 - Rat(4) * a2 * b2);
  EXPECT_EQ(x.surface(), test::surface_example("split7-24").surface);
}

TEST(NodeCentered, DegenerateVertex) {
  EXPECT_EQ(code_of([] { node_centered(space("x^2*w^2+y^4+z^4")); }), ErrorCode::kNodeDegenerate);
  EXPECT_EQ(code_of([] { node_centered(space("w^4+x^4")); }), ErrorCode::kNodeDegenerate);
}

TEST(CenterAtNode, MovesAnyRationalNode) {
  auto ex = test::surface_example("split7-24");
  for (std::size_t i : {1U, 4U, 7U}) {
    CenteredSurface cs = center_at_node(ex.surface, ex.nodes[i]);
    EXPECT_TRUE(ex.nodes[i].transformed(cs.m).equals(ProjPoint::of({0, 0, 0, 1})));
    EXPECT_EQ(classify_conic(cs.quartic.g2), ConicClass::kSmooth);
  }
}

TEST(ProjectQuartic, SurfaceBranchCurve) {
  NodeCenteredQuartic x = surface_quartic();
  QuarticProjection p = project_quartic(x);
  EXPECT_EQ(p.delta, delta2());
  EXPECT_EQ(p.gamma, x.g3 * x.g3 - x.g2 * x.g4);
  EXPECT_TRUE(p.reduced);
  ASSERT_TRUE(p.contact);
  EXPECT_EQ(p.contact->kind, ContactKind::kSimpleContact);
  EXPECT_EQ(p.contact->tangent_count, 6);
}

TEST(ProjectQuartic, DoubleConicIsNotReduced) {
  Form q = plane("x^2+y^2+z^2");
  NodeCenteredQuartic x{delta2(), Form(plane_vars(), 3), -(q * q)};
  QuarticProjection p = project_quartic(x);
  EXPECT_FALSE(p.reduced);
  EXPECT_EQ(p.gamma, delta2() * q * q);
  EXPECT_EQ(p.delta, delta2());
}

TEST(ProjectQuartic, DeltaIsAlwaysG2) {
  test::Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    Form g2 = plane("z^2-4*x*y") + Rat(rng.range(0, 3)) * plane("x^2");
    // g2 vanishes at (0:1:0); keep the y³ and y⁴ terms so no line through the node lies on X there
    Form g3, g4;
    do g3 = test::random_form(rng, plane_vars(), 3, 5, 90);
    while (g3.coeff({0, 3, 0, 0}).is_zero());
    do g4 = test::random_form(rng, plane_vars(), 4, 5, 90);
    while (g4.coeff({0, 4, 0, 0}).is_zero());
    NodeCenteredQuartic x{g2, g3, g4};
    EXPECT_EQ(project_quartic(x).delta, g2);
  }
}

TEST(ProjectQuartic, Errors) {
  NodeCenteredQuartic cone{plane("x^2"), plane("y^3"), plane("z^4")};
  EXPECT_EQ(code_of([&] { project_quartic(cone); }), ErrorCode::kNodeDegenerate);
  // g2, g3, g4 all vanish at (0:1:0): the line through it and the vertex lies on X
  NodeCenteredQuartic line{delta2(), plane("x*y^2+z^3"), plane("x*y^3+z^4")};
  EXPECT_EQ(code_of([&] { project_quartic(line); }), ErrorCode::kLineThroughNode);
}

TEST(Alpha1, CoordinateHyperplane) {
  NodeCenteredQuartic x = surface_quartic();
  Form a = alpha1_map(x, space("w"));
  EXPECT_EQ(a, -x.g3);
  EXPECT_TRUE(passes_contact_divisor(x, a));
  Form b = alpha1_map(x, space("w+x"));
  EXPECT_EQ(b, x.g2 * plane("x") - x.g3);
  EXPECT_TRUE(passes_contact_divisor(x, b));
  EXPECT_EQ(alpha1_map(x, space("2*w+2*x")), b);
}

TEST(Alpha1, HyperplaneThroughASecondNode) {
  // w + y = 0 contains (0:1:1:−1), which projects to (0:1:1)
  NodeCenteredQuartic x = surface_quartic();
  Form a = alpha1_map(x, space("w+y"));
  EXPECT_TRUE(vanishes_at(a, ProjPoint::of({0, 1, 1})));
  EXPECT_FALSE(vanishes_at(alpha1_map(x, space("w+2*y")), ProjPoint::of({0, 1, 1})));
  EXPECT_EQ(code_of([&] { alpha1_map(x, space("x+y")); }), ErrorCode::kHyperplaneThroughNode);
}

TEST(Alpha2, Products) {
  NodeCenteredQuartic x = surface_quartic();
  EXPECT_EQ(alpha2_map(x, plane("x"), Form(plane_vars(), 2)), plane("x") * x.g3);
  Form b = alpha2_map(x, plane("z"), x.g2);
  EXPECT_EQ(b, plane("z") * x.g3 - x.g2 * x.g2);
  EXPECT_TRUE(passes_contact_divisor(x, b));
  EXPECT_EQ(code_of([&] { alpha2_map(x, Form(plane_vars(), 1), plane("x^2")); }), ErrorCode::kQuadricSingularAtNode);
}

TEST(Alpha2, QuadricThroughASecondNode) {
  // x·w − x·y vanishes at (1:1:0:1)
  NodeCenteredQuartic x = surface_quartic();
  Form a = alpha2_map(x, space("x*w-x*y"));
  EXPECT_EQ(a, alpha2_map(x, plane("x"), plane("-x*y")));
  EXPECT_TRUE(vanishes_at(a, ProjPoint::of({1, 1, 0})));
  EXPECT_TRUE(passes_contact_divisor(x, a));
  EXPECT_EQ(code_of([&] { alpha2_map(x, space("w^2+x*y")); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { alpha2_map(x, space("x*y")); }), ErrorCode::kQuadricSingularAtNode);
}

TEST(SurfaceNode, ListedNodes) {
  auto ex = test::surface_example("split7-24");
  EXPECT_TRUE(verify_surface_node(ex.surface, ProjPoint::of({0, 0, 0, 1})).node);
  EXPECT_TRUE(verify_surface_node(ex.surface, ProjPoint::of({1, 1, 1, 0})).node);
  for (const auto& p : ex.nodes) EXPECT_TRUE(verify_surface_node(ex.surface, p).node) << p.to_string();
  NodeCheck c = verify_surface_node(space("x^2*w^2+y^4+z^4"), ProjPoint::of({0, 0, 0, 1}));
  EXPECT_TRUE(c.singular);
  EXPECT_FALSE(c.node);
  EXPECT_FALSE(verify_surface_node(ex.surface, ProjPoint::of({1, 2, 3, 4})).on_curve);
}

TEST(SurfaceNode, Completeness) {
  auto ex = test::surface_example("split7-24");
  EXPECT_TRUE(surface_nodes_complete(ex.surface, ex.nodes).complete);
  std::vector<ProjPoint> seven(ex.nodes.begin(), ex.nodes.end() - 1);
  EXPECT_FALSE(surface_nodes_complete(ex.surface, seven).complete);
}

TEST(SurfaceNode, ProjectionTransfersNodes) {
  auto ex = test::surface_example("split7-24");
  CenteredSurface cs = center_at_node(ex.surface, ex.nodes[0]);
  Form gamma = project_quartic(cs.quartic).gamma;
  for (std::size_t i = 1; i < ex.nodes.size(); ++i) {
    ProjPoint moved = ex.nodes[i].transformed(cs.m);
    ProjPoint image(std::vector<NFElem>{moved.coords()[0], moved.coords()[1], moved.coords()[2]});
    EXPECT_TRUE(verify_node(gamma, image).node) << ex.nodes[i].to_string();
  }
}

TEST(GeneralPositionP3, SurfaceNodes) {
  auto ex = test::surface_example("split7-24");
  GeneralPositionP3 g = general_position_p3(ex.nodes);
  EXPECT_TRUE(g);
  EXPECT_EQ(g.kind, GeneralPositionP3::Kind::kGeneral);
}

TEST(GeneralPositionP3, Degenerate) {
  std::vector<ProjPoint> collinear{ProjPoint::of({1, 0, 0, 0}), ProjPoint::of({0, 1, 0, 0}),
                                   ProjPoint::of({1, 1, 0, 0}), ProjPoint::of({0, 0, 1, 0}),
                                   ProjPoint::of({0, 0, 0, 1})};
  GeneralPositionP3 a = general_position_p3(collinear);
  EXPECT_EQ(a.kind, GeneralPositionP3::Kind::kCollinearTriple);
  EXPECT_EQ(a.indices, (std::vector<std::size_t>{0, 1, 2}));

  std::vector<ProjPoint> planar{ProjPoint::of({1, 0, 0, 0}), ProjPoint::of({0, 1, 0, 0}), ProjPoint::of({0, 0, 1, 0}),
                                ProjPoint::of({1, 1, 1, 0}), ProjPoint::of({1, 2, 3, 0}), ProjPoint::of({0, 0, 0, 1})};
  GeneralPositionP3 b = general_position_p3(planar);
  EXPECT_EQ(b.kind, GeneralPositionP3::Kind::kCoplanarFive);
  EXPECT_EQ(b.indices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(b);
}

TEST(Syzygetic, SurfaceExample) {
  auto ex = test::surface_example("split7-24");
  SyzygeticResult r = syzygetic_test(ex.surface, ex.nodes);
  ASSERT_TRUE(r.syzygetic);
  ASSERT_TRUE(r.system);
  EXPECT_EQ(r.system->dimension, 2);
  EXPECT_EQ(r.subset.size(), 8U);
  FormSpace s = FormSpace::space(2);
  RatMatrix rows;
  for (const auto& p : ex.nodes)
    for (const auto& row : cond_point(s, p).rows) rows.push_back(row);
  EXPECT_EQ(test::naive_rank(rows), 7);
  // f = Σ ternary_i · monomial_i(q0, q1, q2)
  ASSERT_EQ(r.quadrics.size(), 3U);
  ASSERT_EQ(r.ternary.size(), 6U);
  Form sum(space_vars(), 4);
  auto basis = monomial_basis(3, 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Form term = Form::constant(space_vars(), r.ternary[i]);
    for (int v = 0; v < 3; ++v) term = term * r.quadrics[static_cast<std::size_t>(v)].pow(basis[i][static_cast<std::size_t>(v)]);
    sum += term;
  }
  EXPECT_EQ(sum, ex.surface);
  // each quadric is a combination of f1, f2, f3
  std::vector<Form> fs{space("x*w-y^2+z^2"), space("y*w-x^2+z^2"), space("z*w-x^2+y^2")};
  for (const auto& q : r.quadrics) {
    RatMatrix m(3);
    for (std::size_t k = 0; k < 3; ++k)
      for (const auto& e : s.basis) m[k].push_back(fs[k].coeff(e));
    std::vector<Rat> qv;
    for (const auto& e : s.basis) qv.push_back(q.coeff(e));
    m.push_back(qv);
    EXPECT_EQ(test::naive_rank(m), 3) << q.to_string();
  }
}

TEST(Syzygetic, GenericPointsAndShortLists) {
  auto ex = test::surface_example("split7-24");
  std::vector<ProjPoint> generic{ProjPoint::of({1, 0, 0, 0}), ProjPoint::of({0, 1, 0, 0}), ProjPoint::of({0, 0, 1, 0}),
                                 ProjPoint::of({0, 0, 0, 1}), ProjPoint::of({1, 1, 1, 1}), ProjPoint::of({1, 2, 3, 5}),
                                 ProjPoint::of({2, -1, 7, 3}), ProjPoint::of({-3, 4, 1, 9})};
  ASSERT_TRUE(general_position_p3(generic));
  FormSpace s = FormSpace::space(2);
  RatMatrix rows;
  for (const auto& p : generic)
    for (const auto& row : cond_point(s, p).rows) rows.push_back(row);
  EXPECT_EQ(test::naive_rank(rows), 8);
  EXPECT_FALSE(syzygetic_test(ex.surface, generic).syzygetic);
  std::vector<ProjPoint> seven(ex.nodes.begin(), ex.nodes.begin() + 7);
  EXPECT_FALSE(syzygetic_test(ex.surface, seven).syzygetic);
}

// g2·w² + 2·g3·w + f2² with g3 three lines, each meeting xy = z² at two of
// the points (1 : k² : k); X is singular there in w = 0.
struct Configured {
  Form surface;
  std::vector<ProjPoint> nodes;
};

Configured configured_surface() {
  auto line = [](long a, long b) {
    // the line through (1, a², a) and (1, b², b)
    std::vector<Rat> p{Rat(1), Rat(a * a), Rat(a)}, q{Rat(1), Rat(b * b), Rat(b)};
    Rat cx = p[1] * q[2] - p[2] * q[1], cy = p[2] * q[0] - p[0] * q[2], cz = p[0] * q[1] - p[1] * q[0];
    return Rat(cx) * plane("x") + cy * plane("y") + cz * plane("z");
  };
  Form f2 = plane("x*y-z^2");
  Form g3 = line(1, 2) * line(3, -1) * line(-2, -3);
  NodeCenteredQuartic x{delta2(), g3, f2 * f2};
  Configured out{x.surface(), {ProjPoint::of({0, 0, 0, 1})}};
  for (long k : {1L, 2L, 3L, -1L, -2L, -3L}) out.nodes.push_back(ProjPoint::of({1, k * k, k, 0}));
  return out;
}

TEST(Configuration33, FoundInTheDoubleConicPlane) {
  Configured c = configured_surface();
  for (const auto& p : c.nodes) ASSERT_TRUE(verify_surface_node(c.surface, p).node) << p.to_string();
  auto cfg = detect_33_configuration(c.surface, c.nodes, 0);
  ASSERT_TRUE(cfg);
  EXPECT_EQ(cfg->nodes, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(cfg->hyperplane.proportional_to(space("w")));
  EXPECT_EQ(cfg->conic.degree(), 2);
}

TEST(Configuration33, AbsentCases) {
  Configured c = configured_surface();
  std::vector<ProjPoint> five(c.nodes.begin(), c.nodes.begin() + 5);
  EXPECT_FALSE(detect_33_configuration(c.surface, five, 0));
  auto ex = test::surface_example("split7-24");
  EXPECT_FALSE(detect_33_configuration(ex.surface, ex.nodes, 0));
}

TEST(QuarticFromSextic, RecoversTheBranchData) {
  NodeCenteredQuartic x = surface_quartic();
  Form gamma = x.g3 * x.g3 - x.g2 * x.g4;
  NodeCenteredQuartic y = quartic_from_sextic(gamma, x.g2);
  QuarticProjection p = project_quartic(y);
  EXPECT_TRUE(p.gamma.proportional_to(gamma));
  EXPECT_TRUE(p.delta.proportional_to(x.g2));
}

}  // namespace
}  // namespace nodalsplit
