#include <gtest/gtest.h>

#include "nodalsplit/conic.hpp"
#include "nodalsplit/cover.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/form.hpp"
#include "nodalsplit/matrix.hpp"
#include "nodalsplit/number_field.hpp"
#include "nodalsplit/point.hpp"
#include "testing.hpp"

namespace nodalsplit {
namespace {

using test::plane;

BiForm S() { return BiForm::variable(0); }
BiForm T() { return BiForm::variable(1); }
BiForm U() { return BiForm::variable(2); }
BiForm V() { return BiForm::variable(3); }

TEST(Parse, CubicFermat) {
  Form f = plane("x^3+y^3+z^3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.terms().size(), 3U);
  EXPECT_EQ(f.coeff({3, 0, 0, 0}), Rat(1));
}

TEST(Parse, BranchConic) {
  EXPECT_EQ(plane("z^2-4*x*y"), delta2());
  EXPECT_EQ(plane("z^2 - 4xy"), delta2());  // implicit products
  EXPECT_EQ(plane("(z)^2-(2x)*(2y)"), delta2());
}

TEST(Parse, Errors) {
  try {
    plane("x+y^2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHomogeneous);
  }
  try {
    plane("x^2+*y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  }
  EXPECT_THROW(plane("x*q"), SyntaxError);
  EXPECT_THROW(plane("(x+y"), SyntaxError);
  EXPECT_THROW(plane(""), SyntaxError);
}

TEST(Parse, ZeroAndRationalCoefficients) {
  Form f = plane("1/2*x*y - 1/2 x*y + z^2");
  EXPECT_EQ(f, plane("z^2"));
  try {  // '/' only appears inside literals
    plane("x*y/2");
    ADD_FAILURE() << "division accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  }
  EXPECT_TRUE(plane("x^2-x^2").is_zero());
  EXPECT_EQ(parse_univariate("b^2-b-1", "b"), (std::vector<Rat>{Rat(-1), Rat(-1), Rat(1)}));
}

TEST(Parse, PrintParseRoundTripOnRegistry) {
  for (const auto& e : app::example_registry()) {
    const auto& vars = e.surface ? space_vars() : plane_vars();
    Form f = parse_form(app::expand(e, e.curve), vars);
    EXPECT_EQ(parse_form(f.to_string(), vars).terms(), f.terms()) << e.id;
    for (const auto& piece : e.pieces) {
      Form p = parse_form(piece.text, vars);
      EXPECT_EQ(parse_form(p.to_string(), vars).terms(), p.terms()) << e.id << " " << piece.name;
    }
  }
}

TEST(Eval, BranchConicAtCoordinatePoint) { EXPECT_TRUE(eval_form(delta2(), ProjPoint::of({1, 0, 0})).is_zero()); }

TEST(Eval, ConjugateNodePointOfTheSplitSextic) {
  std::vector<Rat> mp{Rat(1), Rat(3), Rat(3), Rat(1), Rat(3), Rat(3), Rat(1)};
  FieldRef k = NumberField::create(QPoly(mp));
  NFElem a = k->gen();
  NFElem x = a, y = -a.pow(5) - Rat(2) * a.pow(4) - a.pow(3) - Rat(3) * a - Rat(1), z = NFElem(1);
  ProjPoint p(std::vector<NFElem>{x, y, z});
  EXPECT_TRUE(eval_form(plane("x*y+y*z+z*x"), p).is_zero());
  EXPECT_TRUE(eval_form(plane("x^3+y^3+z^3"), p).is_zero());
  // direct substitution, no form evaluation
  EXPECT_TRUE((x * y + y * z + z * x).is_zero());
  EXPECT_TRUE((x * x * x + y * y * y + z * z * z).is_zero());
  EXPECT_FALSE(eval_form(plane("x^2+y^2+z^2"), p).is_zero());
}

TEST(Substitute, CoverMap) {
  const auto& map = cover_context().map;
  EXPECT_EQ(plane("x").substitute(map), S() * U());
  BiForm r = S() * V() - T() * U();
  EXPECT_EQ(delta2().substitute(map), r * r);
  BiForm z = S() * V() + T() * U();
  EXPECT_EQ(delta2().substitute(map), z * z - Rat(4) * (S() * U()) * (T() * V()));
  EXPECT_EQ(plane("x").substitute(map).d1(), 1);
  EXPECT_EQ(plane("x").substitute(map).d2(), 1);
}

TEST(Substitute, IdentityAndErrors) {
  Form f = test::plane_example("nonsplit7").gamma;
  std::vector<Form> id{plane("x"), plane("y"), plane("z")};
  EXPECT_EQ(f.substitute(id), f);
  std::vector<Form> bad{plane("x"), plane("y^2"), plane("z")};
  try {
    (void)f.substitute(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInhomogeneousImage);
  }
}

TEST(Substitute, LinearChangeMatchesPointTransform) {
  test::Rng rng(5);
  Form f = test::random_form(rng, plane_vars(), 4, 6);
  RatMatrix m = test::random_invertible(rng, 3, 4);
  for (int i = 0; i < 10; ++i) {
    ProjPoint p = test::random_point(rng, 3, 5);
    EXPECT_EQ(f.linear_change(m).eval(p.rational_coords()), f.eval(mat_vec(m, p.rational_coords())));
  }
}

TEST(Partials, FermatAndConic) {
  EXPECT_EQ(plane("x^3+y^3+z^3").partial(0), plane("3*x^2"));
  auto d = delta2().partials();
  ASSERT_EQ(d.size(), 3U);
  EXPECT_EQ(d[0], plane("-4*y"));
  EXPECT_EQ(d[1], plane("-4*x"));
  EXPECT_EQ(d[2], plane("2*z"));
  EXPECT_TRUE(plane("y^2").partial(0).is_zero());
}

TEST(Partials, EulerIdentityOnSplitSextic) {
  Form g = test::plane_example("split6").gamma;
  auto d = g.partials();
  Form sum = plane("x") * d[0] + plane("y") * d[1] + plane("z") * d[2];
  EXPECT_EQ(sum, Rat(6) * g);
}

TEST(Form, ArithmeticErrorsAndNormalization) {
  EXPECT_THROW((void)(plane("x") + plane("x^2")), Error);
  Form f = plane("2/3*x^2 - 4/9*y*z");
  EXPECT_EQ(f.primitive(), plane("3*x^2-2*y*z"));
  Rat ratio;
  EXPECT_TRUE(f.proportional_to(plane("-3*x^2+2*y*z"), &ratio));
  EXPECT_EQ(ratio, Rat::parse("-2/9"));
  EXPECT_FALSE(f.proportional_to(plane("x^2")));
  EXPECT_EQ(plane("x+y").pow(2), plane("x^2+2*x*y+y^2"));
}

TEST(Form, MonomialBases) {
  EXPECT_EQ(monomial_basis(3, 2).size(), 6U);
  EXPECT_EQ(monomial_basis(3, 6).size(), 28U);
  EXPECT_EQ(monomial_basis(4, 2).size(), 10U);
  EXPECT_EQ(bimonomial_basis(2, 4).size(), 15U);
  auto b = monomial_basis(3, 2);
  EXPECT_EQ(b.front(), (Exponent{2, 0, 0, 0}));
  EXPECT_EQ(b.back(), (Exponent{0, 0, 2, 0}));
}

TEST(BiForm, SwapAndEvaluation) {
  BiForm f = S() * S() * U();  // (2,1)
  BiForm g = f.swap_factors();
  EXPECT_EQ(g, U() * U() * S());
  EXPECT_EQ(g.d1(), 1);
  EXPECT_EQ(g.d2(), 2);
  EXPECT_EQ(f.eval(Rat(2), Rat(1), Rat(3), Rat(5)), Rat(12));
  EXPECT_THROW((void)(f + g), Error);
}

TEST(ProjPoint, ScalingAndTransform) {
  ProjPoint p = ProjPoint::of({2, 4, 6});
  EXPECT_TRUE(p.equals(ProjPoint::of({1, 2, 3})));
  EXPECT_FALSE(p.equals(ProjPoint::of({1, 2, 4})));
  EXPECT_EQ(p.normalized().rational_coords(), (std::vector<Rat>{Rat::parse("1/3"), Rat::parse("2/3"), Rat(1)}));
  RatMatrix swap{{Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  EXPECT_TRUE(p.transformed(swap).equals(ProjPoint::of({2, 1, 3})));
  EXPECT_THROW(ProjPoint::of({0, 0, 0}), Error);
}

TEST(Matrix, InverseAndKernel) {
  RatMatrix a{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  EXPECT_EQ(mat_mul(a, mat_inverse(a)), identity_matrix(2));
  EXPECT_THROW(mat_inverse(RatMatrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), Error);
  RatMatrix rows{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
  auto el = eliminate(rows, 3);
  EXPECT_EQ(el.rank, 1);
  ASSERT_EQ(el.kernel.size(), 2U);
  for (const auto& k : el.kernel) EXPECT_TRUE((k[0] + Rat(2) * k[1] + Rat(3) * k[2]).is_zero());
  EXPECT_EQ(transpose(rows).size(), 3U);
}

}  // namespace
}  // namespace nodalsplit
