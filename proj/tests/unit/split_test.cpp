#include <gtest/gtest.h>

#include <algorithm>

#include "nodalsplit/cover.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/quartic.hpp"
#include "nodalsplit/split.hpp"
#include "testing.hpp"

namespace nodalsplit {
namespace {

using test::plane;

BiForm S() { return BiForm::variable(0); }
BiForm T() { return BiForm::variable(1); }

const TypeResult& type_of(const SplittingReport& r, int m, int n) {
  for (const auto& t : r.types)
    if (t.m == m && t.n == n) return t;
  throw std::runtime_error("type not reported");
}

struct Projected {
  Form gamma, delta;
  std::vector<ProjPoint> nodes;
};

// Branch sextic of the (2,4) surface example, from its first node.
Projected projected_surface() {
  auto ex = test::surface_example("split7-24");
  CenteredSurface cs = center_at_node(ex.surface, ex.nodes[0]);
  QuarticProjection pr = project_quartic(cs.quartic);
  Projected out{pr.gamma, pr.delta, {}};
  for (std::size_t i = 1; i < ex.nodes.size(); ++i) {
    ProjPoint moved = ex.nodes[i].transformed(cs.m);
    out.nodes.emplace_back(std::vector<NFElem>{moved.coords()[0], moved.coords()[1], moved.coords()[2]});
  }
  return out;
}

TEST(Alpha, Values) {
  EXPECT_EQ(alpha_of(3, 3), 6);
  EXPECT_EQ(alpha_of(2, 4), 7);
  EXPECT_EQ(alpha_of(1, 5), 10);
  // D⁺·D⁻ = m² + n² = 2α + d on sextics
  for (auto [m, n] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{1, 5}}) EXPECT_EQ(2 * alpha_of(m, n) + 6, m * m + n * n);
}

TEST(BoundFilter, Sextics) {
  EXPECT_FALSE(node_bound_filter(6, 2, 4, 6));
  EXPECT_TRUE(node_bound_filter(7, 2, 4, 6));
  EXPECT_TRUE(node_bound_filter(6, 3, 3, 6));
  EXPECT_FALSE(node_bound_filter(7, 1, 5, 6));
  EXPECT_FALSE(node_bound_filter(9, 1, 5, 6));
  EXPECT_TRUE(node_bound_filter(10, 1, 5, 6));
}

TEST(DimCheck, FourLineSexticFails) {
  auto ex = test::plane_example("nonsplit6a");
  DimCheck c = necessary_dim_check(make_frame(ex.gamma, ex.conic, ex.nodes), 3, 3);
  EXPECT_FALSE(c.passes);
  ASSERT_EQ(c.subsets.size(), 1U);
  EXPECT_EQ(c.subsets[0].dim_cn1, -1);
}

TEST(DimCheck, SplitSexticPasses) {
  auto ex = test::plane_example("split6");
  DimCheck c = necessary_dim_check(make_frame(ex.gamma, ex.conic, ex.nodes), 3, 3);
  EXPECT_TRUE(c.passes);
  EXPECT_EQ(c.alpha, 6);
  ASSERT_FALSE(c.witnesses.empty());
  const SubsetDims& w = c.subsets[c.witnesses[0]];
  EXPECT_GE(w.dim_cn1, 0);
  EXPECT_GE(w.dim_cn, 0);
  // the conic through the nodes is xy + yz + zx
  for (const auto& p : ex.nodes) EXPECT_TRUE(vanishes_at(plane("x*y+y*z+z*x"), p));
}

TEST(DimCheck, SeptenodalNonSplitFailsOnEverySixSubset) {
  auto ex = test::plane_example("nonsplit7");
  DimCheck c = necessary_dim_check(make_frame(ex.gamma, ex.conic, ex.nodes), 3, 3);
  EXPECT_FALSE(c.passes);
  EXPECT_EQ(c.subsets.size(), 7U);
  for (const auto& s : c.subsets) EXPECT_EQ(s.dim_cn1, -1);
}

TEST(Certificate, SplitSextics) {
  auto s6 = test::plane_example("split6");
  SplitCertificate c6{3, 3, std::nullopt, delta2(), Rat(1), plane("x^3+y^3+z^3"), plane("x*y+y*z+z*x")};
  EXPECT_TRUE(verify_certificate(s6.gamma, delta2(), c6));
  auto s7 = test::plane_example("split7-33");
  Form c2 = plane("z^2-x*y-y^2+x^2");
  SplitCertificate c7{3, 3, std::nullopt, delta2(), Rat(1), plane("y^2*z-3*x*y*z+z^3-x^2*z"), c2};
  EXPECT_TRUE(verify_certificate(s7.gamma, delta2(), c7));
  EXPECT_EQ(parse_form(s7.record->pieces[2].text, plane_vars()), c2 * c2);
}

TEST(Certificate, Rejections) {
  Form cn = plane("x^3+y^3+z^3");
  SplitCertificate zero{3, 3, std::nullopt, delta2(), Rat(1), cn, Form(plane_vars(), 2)};
  EXPECT_FALSE(verify_certificate(cn * cn, delta2(), zero));
  auto s6 = test::plane_example("split6");
  SplitCertificate wrong{3, 3, std::nullopt, delta2(), Rat(1), cn, plane("x*y+y*z-z*x")};
  EXPECT_FALSE(verify_certificate(s6.gamma, delta2(), wrong));
  SplitCertificate bad_deg{3, 3, std::nullopt, delta2(), Rat(1), plane("x^2"), plane("x")};
  EXPECT_THROW(verify_certificate(s6.gamma, delta2(), bad_deg), Error);
}

TEST(Certificate, TangentLineIsChecked) {
  Projected p = projected_surface();
  SplittingReport r = splitting_type(p.gamma, p.delta, p.nodes);
  const TypeResult& t = type_of(r, 2, 4);
  ASSERT_EQ(t.status, TypeStatus::kSplit);
  ASSERT_TRUE(t.certificate);
  ASSERT_TRUE(t.certificate->line);
  EXPECT_TRUE(verify_certificate(p.gamma, t.certificate->delta, *t.certificate));
  SplitCertificate moved = *t.certificate;
  moved.line = plane("z");
  try {
    verify_certificate(p.gamma, moved.delta, moved);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTangentLine);
  }
}

TEST(FactorPullback, ProductOfCoordinates) {
  BiForm f = pullback_curve(plane("x*y"));
  auto a = factor_pullback(f, 1, 1);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->e, 0);
  EXPECT_TRUE(verify_pullback_factor(f, *a));
  EXPECT_EQ(a->unit_rat * a->a * a->a.swap_factors(), f);
  BiForm sv = S() * BiForm::variable(3), tu = T() * BiForm::variable(2);
  EXPECT_TRUE(a->a.proportional_to(sv) || a->a.proportional_to(tu)) << a->a.to_string();
}

TEST(FactorPullback, SplitSextic) {
  auto ex = test::plane_example("split6");
  BiForm f = pullback_curve(ex.gamma);
  auto a = factor_pullback(f, 3, 3);
  ASSERT_TRUE(a);
  ASSERT_EQ(a->e, 0);
  EXPECT_TRUE(verify_pullback_factor(f, *a));
  BiForm c3 = pullback_curve(plane("x^3+y^3+z^3")), c2 = pullback_curve(plane("x*y+y*z+z*x"));
  BiForm r = ramification_form();
  EXPECT_TRUE(a->a.proportional_to(c3 + r * c2) || a->a.proportional_to(c3 - r * c2)) << a->a.to_string();
}

TEST(FactorPullback, SurfaceBranchSextic) {
  Projected p = projected_surface();
  ASSERT_EQ(p.delta, delta2());
  BiForm f = pullback_curve(p.gamma);
  auto a = factor_pullback(f, 2, 4);
  ASSERT_TRUE(a);
  EXPECT_TRUE(verify_pullback_factor(f, *a));
  EXPECT_EQ(a->a.d1(), 2);
  EXPECT_EQ(a->a.d2(), 4);
}

TEST(FactorPullback, NothingFabricatedForNonSplitCurve) {
  auto ex = test::plane_example("nonsplit6a");
  SplitFrame frame = make_frame(ex.gamma, ex.conic, ex.nodes);
  BiForm f = pullback_curve(frame.gamma);
  auto a = factor_pullback(f, 3, 3);
  if (a) EXPECT_TRUE(verify_pullback_factor(f, *a));
  EXPECT_FALSE(a.has_value());
}

TEST(SplittingType, SplitSextic) {
  auto ex = test::plane_example("split6");
  SplittingReport r = splitting_type(ex.gamma, ex.conic, ex.nodes);
  EXPECT_EQ(r.outcome, SplitOutcome::kSplit);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(r.n, 3);
  const TypeResult& t = type_of(r, 3, 3);
  ASSERT_TRUE(t.certificate);
  EXPECT_TRUE(verify_certificate(ex.gamma, t.certificate->delta, *t.certificate));
  EXPECT_TRUE(node_bound_filter(6, 3, 3, 6));
}

TEST(SplittingType, GeneralPositionSixNodal) {
  auto ex = test::plane_example("nonsplit6b");
  SplittingReport r = splitting_type(ex.gamma, ex.conic, ex.nodes);
  EXPECT_EQ(r.outcome, SplitOutcome::kNonSplitting);
  EXPECT_EQ(type_of(r, 2, 4).status, TypeStatus::kExcludedByBound);
  EXPECT_EQ(type_of(r, 1, 5).status, TypeStatus::kExcludedByBound);
  EXPECT_EQ(type_of(r, 3, 3).status, TypeStatus::kExcludedByDimension);
}

TEST(SplittingType, SeptenodalNonSplit) {
  auto ex = test::plane_example("nonsplit7");
  SplittingReport r = splitting_type(ex.gamma, ex.conic, ex.nodes);
  EXPECT_EQ(r.outcome, SplitOutcome::kNonSplitting);
  EXPECT_EQ(type_of(r, 1, 5).status, TypeStatus::kExcludedByBound);
  EXPECT_EQ(type_of(r, 3, 3).status, TypeStatus::kExcludedByDimension);
  // the quartic system through all 7 nodes and the contact divisor is only a pencil
  const TypeResult& t24 = type_of(r, 2, 4);
  EXPECT_EQ(t24.status, TypeStatus::kExcludedByDimension);
  ASSERT_TRUE(t24.dims);
  ASSERT_EQ(t24.dims->subsets.size(), 1U);
  EXPECT_EQ(t24.dims->subsets[0].dim_cn, 1);
}

TEST(Criterion24, SurfaceBranchSexticHolds) {
  Projected p = projected_surface();
  Criterion24Result c = criterion_24_7nodal(make_frame(p.gamma, p.delta, p.nodes));
  EXPECT_EQ(c.verdict, Criterion24::kHolds);
  EXPECT_EQ(c.conic_dim, -1);
  EXPECT_GE(c.quartic_dim, 2);
}

TEST(Criterion24, SeptenodalNonSplitFailsB) {
  auto ex = test::plane_example("nonsplit7");
  Criterion24Result c = criterion_24_7nodal(make_frame(ex.gamma, ex.conic, ex.nodes));
  EXPECT_EQ(c.verdict, Criterion24::kFailsB);
  EXPECT_EQ(c.quartic_dim, 1);
}

TEST(Criterion24, SevenNodesOnAConicFailA) {
  // Frame-level case: the criterion reads only node positions and the contact
  // form, so seven points of z² − xy stand in for the nodes.
  auto ex = test::plane_example("nonsplit7");
  SplitFrame frame = make_frame(ex.gamma, ex.conic, ex.nodes);
  frame.nodes.clear();
  for (long k = 1; k <= 7; ++k) frame.nodes.push_back(ProjPoint::of({1, k * k, k}));
  Criterion24Result c = criterion_24_7nodal(frame);
  EXPECT_EQ(c.verdict, Criterion24::kFailsA);
  EXPECT_EQ(c.conic_dim, 0);
}

TEST(Criterion24, NeedsSevenNodes) {
  auto ex = test::plane_example("split6");
  try {
    criterion_24_7nodal(make_frame(ex.gamma, ex.conic, ex.nodes));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongNodeCount);
  }
}

TEST(SplitFrame, NormalizesTheConic) {
  auto ex = test::plane_example("nonsplit7");
  SplitFrame frame = make_frame(ex.gamma, ex.conic, ex.nodes);
  EXPECT_EQ(frame.node_count, 7);
  EXPECT_EQ(ex.conic.linear_change(frame.norm.m_inv), frame.norm.lambda * delta2());
  EXPECT_EQ(frame.gamma, ex.gamma.linear_change(frame.norm.m_inv));
  for (const auto& p : frame.nodes) EXPECT_TRUE(vanishes_at(frame.gamma, p));
  EXPECT_EQ(frame.contact.kind, ContactKind::kSimpleContact);
}

}  // namespace
}  // namespace nodalsplit
