#include <gtest/gtest.h>

#include "nodalsplit/curve.hpp"
#include "nodalsplit/errors.hpp"
#include "testing.hpp"

namespace nodalsplit {
namespace {

using test::plane;

TEST(VerifyNode, TransverseLines) {
  NodeCheck c = verify_node(plane("x*y"), ProjPoint::of({0, 0, 1}));
  EXPECT_TRUE(c.on_curve);
  EXPECT_TRUE(c.singular);
  EXPECT_TRUE(c.node);
}

TEST(VerifyNode, CuspIsNotANode) {
  NodeCheck c = verify_node(plane("y^2*z-x^3"), ProjPoint::of({0, 0, 1}));
  EXPECT_TRUE(c.singular);
  EXPECT_FALSE(c.node);
  EXPECT_TRUE(c.discriminant.is_zero());
}

TEST(VerifyNode, SmoothAndOffCurvePoints) {
  NodeCheck smooth = verify_node(delta2(), ProjPoint::of({1, 0, 0}));
  EXPECT_TRUE(smooth.on_curve);
  EXPECT_FALSE(smooth.singular);
  NodeCheck off = verify_node(delta2(), ProjPoint::of({1, 1, 1}));
  EXPECT_FALSE(off.on_curve);
  EXPECT_FALSE(off.node);
  EXPECT_THROW(verify_node(delta2(), ProjPoint::of({1, 0, 0, 0})), Error);
}

TEST(VerifyNode, FourLineSexticAtOneOneOne) {
  auto ex = test::plane_example("nonsplit6a");
  EXPECT_TRUE(verify_node(ex.gamma, ProjPoint::of({1, 1, 1})).node);
  for (const auto& p : ex.nodes) EXPECT_TRUE(verify_node(ex.gamma, p).node) << p.to_string();
}

TEST(VerifyNode, ConjugateOrbits) {
  auto ex = test::plane_example("split7-33");
  ASSERT_EQ(ex.nodes.size(), 3U);
  for (const auto& p : ex.nodes) EXPECT_TRUE(verify_node(ex.gamma, p).node) << p.to_string();
  EXPECT_EQ(test::orbit_total(ex.nodes), 7);
}

TEST(VerifyNode, InvariantUnderCoordinateChange) {
  auto ex = test::plane_example("nonsplit6a");
  test::Rng rng(2024);
  for (int k = 0; k < 5; ++k) {
    RatMatrix m = test::random_invertible(rng, 3, 3);
    Form moved = ex.gamma.linear_change(mat_inverse(m));
    for (const auto& p : ex.nodes) EXPECT_TRUE(verify_node(moved, p.transformed(m)).node);
    Form cusp = plane("y^2*z-x^3").linear_change(mat_inverse(m));
    NodeCheck c = verify_node(cusp, ProjPoint::of({0, 0, 1}).transformed(m));
    EXPECT_TRUE(c.singular);
    EXPECT_FALSE(c.node);
  }
}

TEST(Completeness, FourLineSexticNodeList) {
  auto ex = test::plane_example("nonsplit6a");
  EXPECT_TRUE(singular_locus_complete(ex.gamma, ex.nodes));
  std::vector<ProjPoint> five(ex.nodes.begin(), ex.nodes.end() - 1);
  EXPECT_FALSE(singular_locus_complete(ex.gamma, five));
}

TEST(Completeness, ConjugateOrbitCannotBeSplit) {
  // The six nodes form one Galois orbit, so the only proper invariant subset is empty.
  auto ex = test::plane_example("split6");
  EXPECT_TRUE(singular_locus_complete(ex.gamma, ex.nodes));
  CompletenessResult partial = check_singular_locus(ex.gamma, {});
  EXPECT_FALSE(partial.complete);
  EXPECT_FALSE(partial.reason.empty());
}

TEST(Completeness, SmoothConicAndSeeds) {
  EXPECT_TRUE(singular_locus_complete(delta2(), {}));
  auto ex = test::plane_example("nonsplit7");
  for (int seed : {0, 3, 7}) EXPECT_TRUE(singular_locus_complete(ex.gamma, ex.nodes, seed)) << seed;
}

TEST(Completeness, ClaimedPointMustBeSingular) {
  auto ex = test::plane_example("nonsplit6a");
  auto claimed = ex.nodes;
  claimed.push_back(ProjPoint::of({5, 7, 11}));
  EXPECT_FALSE(singular_locus_complete(ex.gamma, claimed));
}

TEST(Completeness, EveryRegistrySexticHasItsNodeCount) {
  for (const auto& e : app::example_registry()) {
    if (e.surface) continue;
    auto ex = test::plane_example(e.id);
    int expected = e.id.find('7') != std::string::npos ? 7 : 6;
    EXPECT_EQ(test::orbit_total(ex.nodes), expected) << e.id;
    for (const auto& p : ex.nodes) EXPECT_TRUE(verify_node(ex.gamma, p).node) << e.id << " " << p.to_string();
    EXPECT_TRUE(singular_locus_complete(ex.gamma, ex.nodes)) << e.id;
  }
}

TEST(Irreducibility, RegistrySextics) {
  EXPECT_TRUE(irreducibility_sextic(test::plane_example("nonsplit6a").gamma, test::plane_example("nonsplit6a").nodes));
  EXPECT_TRUE(irreducibility_sextic(test::plane_example("nonsplit7").gamma, test::plane_example("nonsplit7").nodes));
  EXPECT_TRUE(irreducibility_sextic(test::plane_example("split6").gamma, test::plane_example("split6").nodes));
}

TEST(Irreducibility, FiveCollinearNodes) {
  // line z = 0 times a quintic crossing it at (i:1:0), i = 1..5
  Form quintic = plane("(x-y)*(x-2*y)*(x-3*y)*(x-4*y)*(x-5*y)+z*(x^4+y^4+z^4)");
  Form gamma = plane("z") * quintic;
  std::vector<ProjPoint> nodes;
  for (long i = 1; i <= 5; ++i) nodes.push_back(ProjPoint::of({i, 1, 0}));
  for (const auto& p : nodes) EXPECT_TRUE(verify_node(gamma, p).node);
  EXPECT_FALSE(irreducibility_sextic(gamma, nodes));
}

TEST(Irreducibility, TooManyNodes) {
  auto ex = test::plane_example("nonsplit7");
  auto eight = ex.nodes;
  eight.push_back(ProjPoint::of({3, 5, 7}));
  try {
    irreducibility_sextic(ex.gamma, eight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyNodes);
  }
}

TEST(Reducedness, LineTest) {
  EXPECT_TRUE(reduced_by_line_test(test::plane_example("split6").gamma));
  EXPECT_FALSE(reduced_by_line_test(delta2() * plane("x^2+y*z").pow(2)));
}

TEST(Resultant, MatchesSylvesterAtSamplePoints) {
  Form a = plane("x^2+y^2-z^2+x*y"), b = plane("y^3-x*z^2+2*x^2*y-z^3");
  QPoly res = resultant_y(affine_chart(a), affine_chart(b), 2, 3);
  for (int x0 = -3; x0 <= 3; ++x0) {
    // coefficients in y of a(x0, y, 1), b(x0, y, 1)
    std::vector<Rat> ay{Rat(x0 * x0 - 1), Rat(x0), Rat(1)};
    std::vector<Rat> by{Rat(-x0 - 1), Rat(2 * x0 * x0), Rat(0), Rat(1)};
    EXPECT_EQ(res.eval(Rat(x0)), test::sylvester_resultant(ay, by)) << x0;
  }
}

TEST(Shear, Invertible) {
  for (int i = 0; i < 25; ++i) EXPECT_FALSE(test::naive_det(shear_matrix(i)).is_zero()) << i;
}

}  // namespace
}  // namespace nodalsplit
