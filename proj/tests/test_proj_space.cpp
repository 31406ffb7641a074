#include <gtest/gtest.h>

#include "cobord/errors.hpp"
#include "cobord/proj_space.hpp"
#include "support.hpp"

namespace cobord {
namespace {

using testing::cc;
using testing::proj;

TEST(ProjSpaceClass, RingRelation) {
  const auto x = ProjSpaceClass::x_power(2, 1);
  EXPECT_EQ(x * x, proj("x^2", 2));
  EXPECT_TRUE((x * x * x).is_zero());
  EXPECT_TRUE(ProjSpaceClass::x_power(2, 3).is_zero());
  EXPECT_EQ(x.dim(), 2);
}

TEST(ProjSpaceClass, FromSeriesNeedsEnoughOrder) {
  EXPECT_THROW(ProjSpaceClass::from_series(testing::series("x", {"x"}, 1), 2), TruncationError);
  EXPECT_EQ(ProjSpaceClass::from_series(testing::series("x + x^3", {"x"}, 4), 2), proj("x", 2));
}

TEST(ProjSpaceClass, DimensionMismatch) {
  EXPECT_THROW(proj("x", 2) + proj("x", 3), UsageError);
}

TEST(LinePowerClass, Examples) {
  const auto ctx = FglContext::build(2);
  EXPECT_EQ(line_power_class(ctx, 2, 1), proj("x", 2));
  EXPECT_EQ(line_power_class(ctx, 2, 3), proj("3*x - 3*p1*x^2", 2));
  EXPECT_TRUE(line_power_class(ctx, 2, 0).is_zero());
  EXPECT_THROW(line_power_class(ctx, 3, 2), TruncationError);
}

TEST(LinePowerClass, GroupLawRecurrence) {
  const auto ctx = FglContext::build(4);
  const int n = 4;
  const auto x = line_power_class(ctx, n, 1);
  for (long k = -3; k <= 6; ++k) {
    EXPECT_EQ(fgl_add(ctx, line_power_class(ctx, n, k), x), line_power_class(ctx, n, k + 1)) << "k = " << k;
    EXPECT_EQ(epsilon_space(line_power_class(ctx, n, k)), proj(std::to_string(k) + "*x", n)) << "k = " << k;
  }
}

TEST(TangentChern, Examples) {
  const auto ctx = FglContext::build(2);
  const auto c2 = tangent_chern(ctx, 2);
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0], proj("3*x", 2));
  EXPECT_EQ(c2[1], proj("3*x^2", 2));
  const auto c1 = tangent_chern(ctx, 1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0], proj("2*x", 1));
  EXPECT_EQ(epsilon_space(c2[0]), proj("3*x", 2));
}

TEST(PullbackTangentChern, Examples) {
  const auto ctx = FglContext::build(3);
  EXPECT_EQ(pullback_tangent_chern(ctx, MapModel(2, 1)), tangent_chern(ctx, 2));
  EXPECT_EQ(pullback_tangent_chern(ctx, MapModel(2, 2))[0], proj("6*x - 3*p1*x^2", 2));
  for (long d = 1; d <= 6; ++d) {
    EXPECT_EQ(epsilon_space(pullback_tangent_chern(ctx, MapModel(2, d))[0]), proj(std::to_string(3 * d) + "*x", 2));
  }
  EXPECT_THROW(MapModel(2, 0), DomainError);
  EXPECT_THROW(MapModel(0, 2), DomainError);
}

TEST(EpsilonSpace, Examples) {
  EXPECT_EQ(epsilon_space(proj("3*x - 3*p1*x^2", 2)), proj("3*x", 2));
  EXPECT_TRUE(epsilon_space(proj("p2*x^2", 2)).is_zero());
  EXPECT_EQ(epsilon_space(proj("x^2", 2)), proj("x^2", 2));
}

TEST(EvaluateCharPoly, Examples) {
  const auto ctx = FglContext::build(2);
  EXPECT_EQ(evaluate_char_poly(cc("b1 - a1", 2, 2), MapModel(2, 2), ctx), proj("3*x - 3*p1*x^2", 2));
  EXPECT_TRUE(evaluate_char_poly(cc("b1 - a1", 2, 2), MapModel(2, 1), ctx).is_zero());
  EXPECT_EQ(evaluate_char_poly(cc("1", 2, 2), MapModel(2, 3), ctx), proj("1", 2));
}

TEST(EvaluateCharPoly, Errors) {
  const auto ctx = FglContext::build(2);
  EXPECT_THROW(evaluate_char_poly(cc("b1 - a1", 1, 1), MapModel(2, 2), ctx), UsageError);
  EXPECT_THROW(evaluate_char_poly(cc("b1 - a1", 2, 2, SymbolMode::Cohomology), MapModel(2, 2), ctx), DomainError);
}

TEST(EvaluateCharPoly, RingHomomorphism) {
  const auto ctx = FglContext::build(3);
  const MapModel f(3, 2);
  testing::Sampler s(31);
  const auto vars = CharClassPoly::variables_for(3, 3);
  for (int round = 0; round < 8; ++round) {
    const CharClassPoly p(3, 3, s.graded(vars, round % 3, 3), SymbolMode::Cobordism);
    const CharClassPoly q(3, 3, s.graded(vars, 1, 3), SymbolMode::Cobordism);
    EXPECT_EQ(evaluate_char_poly(p * q, f, ctx), evaluate_char_poly(p, f, ctx) * evaluate_char_poly(q, f, ctx));
    EXPECT_EQ(evaluate_char_poly(p + q, f, ctx), evaluate_char_poly(p, f, ctx) + evaluate_char_poly(q, f, ctx));
  }
}

}  // namespace
}  // namespace cobord
