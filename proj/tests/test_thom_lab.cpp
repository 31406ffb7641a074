#include <gtest/gtest.h>

#include "cobord/errors.hpp"
#include "cobord/thom_lab.hpp"
#include "support.hpp"

namespace cobord {
namespace {

using testing::cc;
using testing::proj;

constexpr SymbolMode kCob = SymbolMode::Cobordism;
constexpr SymbolMode kCoh = SymbolMode::Cohomology;

CharClassPoly sigma2_by_hand(int rank) {
  const auto c = quotient_chern(rank, rank, 3);
  return c[1] * c[1] - c[0] * c[2];
}

TEST(SingularityId, ParseAndName) {
  EXPECT_EQ(SingularityId::parse("sigma1"), SingularityId::sigma1());
  EXPECT_EQ(SingularityId::parse("sigma3").r(), 3);
  EXPECT_EQ(SingularityId::sigma(2).codimension(), 4);
  EXPECT_EQ(SingularityId::sigma(2).name(), "sigma2");
  EXPECT_THROW(SingularityId::parse("sigma0"), UsageError);
  EXPECT_THROW(SingularityId::parse("cusp"), UsageError);
  EXPECT_THROW(SingularityId::sigma(0), UsageError);
}

TEST(ThomPoly, Examples) {
  EXPECT_EQ(thom_poly_cohomological(SingularityId::sigma1(), 2, 2), cc("b1 - a1", 2, 2, kCoh));
  EXPECT_EQ(thom_poly_cohomological(SingularityId::sigma1(), 1, 1), quotient_chern(1, 1, 1)[0]);
  for (int rank = 2; rank <= 3; ++rank) {
    const auto t2 = thom_poly_cohomological(SingularityId::sigma(2), rank, rank);
    EXPECT_EQ(t2, sigma2_by_hand(rank));
    EXPECT_EQ(t2.homogeneous_part(4), t2);
    EXPECT_TRUE(t2.has_constant_coefficients());
  }
  EXPECT_THROW(thom_poly_cohomological(SingularityId::sigma1(), 2, 3), ConfigurationError);
}

TEST(ThomPoly, SigmaRVanishesAboveTheRank) {
  // A kernel of dimension r > rank is impossible; the r x r determinant
  // vanishes identically.
  EXPECT_TRUE(thom_poly_cohomological(SingularityId::sigma(3), 2, 2).is_zero());
  EXPECT_TRUE(thom_poly_cohomological(SingularityId::sigma(2), 1, 1).is_zero());
  const auto t3 = thom_poly_cohomological(SingularityId::sigma(3), 3, 3);
  EXPECT_FALSE(t3.is_zero());
  EXPECT_EQ(t3.homogeneous_part(9), t3);
}

TEST(Realization, TrivialSigma1AndSigma2) {
  const auto r1 = realization_trivial(SingularityId::sigma1(), 2, 2);
  EXPECT_EQ(r1.poly(), cc("b1 - a1", 2, 2));
  EXPECT_EQ(r1.label(), "trivial");
  EXPECT_TRUE(check_realization(r1, SingularityId::sigma1()));
  const auto r2 = realization_trivial(SingularityId::sigma(2), 2, 2);
  EXPECT_EQ(r2.poly(), sigma2_by_hand(2).with_mode(kCob));
  EXPECT_TRUE(check_realization(r2, SingularityId::sigma(2)));
  EXPECT_FALSE(check_realization(r2, SingularityId::sigma1()));
}

TEST(Realization, ConstructorChecksValidity) {
  EXPECT_THROW(Realization(cc("b1", 1, 1), SingularityId::sigma1(), "bad"), DomainError);
  EXPECT_THROW(Realization(cc("b1 - a1", 1, 1, kCoh), SingularityId::sigma1(), "bad"), DomainError);
  EXPECT_NO_THROW(Realization(cc("b1 - a1 + p1*a1^2", 1, 1), SingularityId::sigma1(), "ok"));
  EXPECT_FALSE(check_realization(cc("b1", 1, 1), SingularityId::sigma1()));
}

TEST(RealizationP1, CurveCase) {
  // Oracle expansion of F(b1, inverse(a1)) to grade 3.
  const auto ctx = FglContext::build(3);
  const auto p1 = realization_p1(ctx, 1, 3);
  EXPECT_EQ(p1.poly(), cc("-a1 + b1 + p1*(a1*b1 - a1^2) + p2*(a1*b1^2 - a1^2*b1)"
                          " + p1^2*(-a1^3 + 2*a1^2*b1 - a1*b1^2)",
                          1, 1));
  EXPECT_EQ(realization_p1(ctx, 1, 2).poly(), cc("b1 - a1 + p1*(a1*b1 - a1^2)", 1, 1));
}

TEST(RealizationP1, GradeOneAndHomogeneity) {
  const auto ctx = FglContext::build(4);
  for (int rank = 1; rank <= 3; ++rank) {
    const auto p1 = realization_p1(ctx, rank, 4);
    const auto ones = [&] {
      auto out = cc("b1 - a1", rank, rank);
      return out;
    }();
    EXPECT_EQ(p1.poly().homogeneous_part(1), ones);
    EXPECT_EQ(p1.poly().augmented(), ones);
    for (const auto& [e, coeff] : p1.poly().poly().terms()) {
      ASSERT_TRUE(coeff.is_homogeneous());
      EXPECT_EQ(p1.poly().poly().grade_of(e) + *coeff.homogeneous_grade(), 1);
    }
  }
}

TEST(RealizationP1, Errors) {
  const auto ctx = FglContext::build(3);
  EXPECT_THROW(realization_p1(ctx, 1, 4), TruncationError);
  EXPECT_THROW(realization_p1(ctx, 0, 2), UsageError);
}

TEST(RealizationP1, AgreesWithLinePowerOnCP2) {
  const auto ctx = FglContext::build(2);
  const auto p1 = realization_p1(ctx, 2, 2);
  for (long d = 1; d <= 10; ++d) {
    EXPECT_EQ(evaluate_char_poly(p1.poly(), MapModel(2, d), ctx), line_power_class(ctx, 2, 3 * d - 3)) << "d = " << d;
  }
}

TEST(RealizationP1, AgreesWithLinePowerOnCP3) {
  // det TCP^n = nu^{n+1}, so P1 on the degree-d map is c1^U(nu^{(n+1)(d-1)}).
  const auto ctx = FglContext::build(3);
  const auto p1 = realization_p1(ctx, 3, 3);
  for (long d = 1; d <= 4; ++d) {
    EXPECT_EQ(evaluate_char_poly(p1.poly(), MapModel(3, d), ctx), line_power_class(ctx, 3, 4 * (d - 1)));
  }
}

TEST(CombineAffine, Examples) {
  const auto ctx = FglContext::build(3);
  const auto p = realization_trivial(SingularityId::sigma1(), 2, 2);
  const auto q = realization_p1(ctx, 2, 3);
  EXPECT_EQ(combine_affine(p, q, 1).poly(), p.poly());
  EXPECT_EQ(combine_affine(p, q, 0).poly(), q.poly());
  const auto two = combine_affine(p, q, 2);
  EXPECT_EQ(two.poly(), p.poly() * Rational(2) - q.poly());
  EXPECT_TRUE(check_realization(two, SingularityId::sigma1()));
  for (long lambda = -2; lambda <= 3; ++lambda) {
    EXPECT_TRUE(check_realization(combine_affine(p, q, lambda), SingularityId::sigma1()));
  }
}

TEST(CombineAffine, RationalLambdaIsOptIn) {
  const auto ctx = FglContext::build(3);
  const auto p = realization_trivial(SingularityId::sigma1(), 1, 1);
  const auto q = realization_p1(ctx, 1, 3);
  EXPECT_THROW(combine_affine(p, q, Rational(1, 2), false), UsageError);
  const auto half = combine_affine(p, q, Rational(1, 2), true);
  EXPECT_EQ(half.poly(), (p.poly() + q.poly()) * Rational(1, 2));
  EXPECT_EQ(combine_affine(p, q, Rational(3), false).poly(), combine_affine(p, q, 3).poly());
}

TEST(CombineAffine, MismatchErrors) {
  const auto s1 = realization_trivial(SingularityId::sigma1(), 2, 2);
  const auto s2 = realization_trivial(SingularityId::sigma(2), 2, 2);
  EXPECT_THROW(combine_affine(s1, s2, 2), UsageError);
  EXPECT_THROW(combine_affine(s1, realization_trivial(SingularityId::sigma1(), 1, 1), 2), UsageError);
}

TEST(LemmaCheck, Examples) {
  const auto ctx = FglContext::build(2);
  const auto d2 = lemma_check(ctx, 2);
  EXPECT_EQ(d2.difference, proj("-3*p1*x^2", 2));
  EXPECT_TRUE(d2.verdict);
  const auto d1 = lemma_check(ctx, 1);
  EXPECT_TRUE(d1.difference.is_zero());
  EXPECT_FALSE(d1.verdict);
  EXPECT_EQ(lemma_check(ctx, 3).difference, proj("-15*p1*x^2", 2));
  EXPECT_THROW(lemma_check(ctx, 0), DomainError);
}

TEST(LemmaCheck, ClosedFormAndAugmentationKernel) {
  const auto ctx = FglContext::build(8);
  for (long d = 1; d <= 10; ++d) {
    const auto report = lemma_check(ctx, d);
    EXPECT_EQ(report.difference, ProjSpaceClass::x_power(2, 2) * (-binomial(3 * d - 3, 2) * LambdaPoly::generator(1)));
    EXPECT_EQ(report.difference, report.class_resolution - report.class_naive);
    EXPECT_TRUE(epsilon_space(report.difference).is_zero());
    EXPECT_EQ(epsilon_space(report.class_resolution), report.class_naive);
  }
}

TEST(Divisibility, Examples) {
  const auto t = thom_poly_cohomological(SingularityId::sigma(2), 2, 2);
  const auto zero = CharClassPoly(2, 2, kDefaultCutoff, kCoh);
  const auto r0 = divisibility_check(zero, t);
  ASSERT_TRUE(r0.divisible());
  EXPECT_TRUE(r0.quotient->is_zero());

  const auto r1 = divisibility_check(t * testing::lam("p1"), t);
  ASSERT_TRUE(r1.divisible());
  EXPECT_EQ(*r1.quotient, cc("p1", 2, 2, kCoh));
  EXPECT_TRUE(r1.integral_flag);

  const auto r2 = divisibility_check(cc("a1", 2, 2, kCoh), t);
  EXPECT_FALSE(r2.divisible());
  EXPECT_EQ(r2.remainder, cc("a1", 2, 2, kCoh));
}

TEST(Divisibility, IntegralityFlag) {
  const auto t = cc("b1 - a1", 1, 1, kCoh);
  const auto r = divisibility_check(t * cc("1/2*p1*a1 + b1", 1, 1, kCoh), t);
  ASSERT_TRUE(r.divisible());
  EXPECT_FALSE(r.integral_flag);
}

TEST(Divisibility, Errors) {
  const auto t = cc("b1 - a1", 1, 1, kCoh);
  EXPECT_THROW(divisibility_check(t, CharClassPoly(1, 1, kDefaultCutoff, kCoh)), UsageError);
  EXPECT_THROW(divisibility_check(t, t.with_mode(kCob)), UsageError);
  EXPECT_THROW(divisibility_check(t, cc("b1 - a1", 2, 2, kCoh)), UsageError);
}

TEST(Divisibility, SoundOnRandomMultiples) {
  testing::Sampler s(41);
  const auto t = thom_poly_cohomological(SingularityId::sigma(2), 2, 2);
  const auto vars = CharClassPoly::variables_for(2, 2);
  for (int round = 0; round < 8; ++round) {
    const CharClassPoly cofactor(2, 2, s.graded(vars, round % 3, 3) + s.graded(vars, 0, 2), kCoh);
    const auto report = divisibility_check(cofactor * t, t);
    ASSERT_TRUE(report.divisible());
    EXPECT_EQ(*report.quotient, cofactor);
    EXPECT_EQ(*report.quotient * t, report.numerator);
  }
}

class TheoremFixture : public ::testing::Test {
 protected:
  FglContext ctx = FglContext::build(6);
  SingularityId sigma1 = SingularityId::sigma1();
  Realization trivial = realization_trivial(SingularityId::sigma1(), 2, 2);
  CharClassPoly t2 = thom_poly_cohomological(SingularityId::sigma(2), 2, 2);
};

TEST_F(TheoremFixture, EqualRealizationsAreDivisible) {
  const auto report = theorem_harness(trivial, trivial, sigma1, SingularityId::sigma(2), ctx);
  EXPECT_TRUE(report.difference.is_zero());
  EXPECT_TRUE(report.division.divisible());
  EXPECT_EQ(report.per_grade.size(), static_cast<std::size_t>(ctx.order() + 1));
}

TEST_F(TheoremFixture, ConstructedMultipleGivesQuotientP1) {
  // Q = P - ch^{-1}(p1 T) augments like P, and ch(P - Q) = p1 T.
  const auto shift = chern_dold_inverse(ctx, t2 * testing::lam("p1"));
  const Realization q(trivial.poly() - shift, sigma1, "shifted");
  const auto report = theorem_harness(trivial, q, sigma1, SingularityId::sigma(2), ctx);
  EXPECT_EQ(report.character, t2 * testing::lam("p1"));
  ASSERT_TRUE(report.division.divisible());
  EXPECT_EQ(*report.division.quotient, cc("p1", 2, 2, kCoh));
  for (const auto& g : report.per_grade) EXPECT_TRUE(g.divisible) << "grade " << g.grade;
}

TEST_F(TheoremFixture, NonMultipleIsFlagged) {
  const Realization q(trivial.poly() + cc("p1*a1^3", 2, 2), sigma1, "perturbed");
  const auto report = theorem_harness(trivial, q, sigma1, SingularityId::sigma(2), ctx);
  EXPECT_FALSE(report.division.divisible());
  EXPECT_FALSE(report.division.remainder.is_zero());
  bool some_grade_fails = false;
  for (const auto& g : report.per_grade) some_grade_fails |= !g.divisible;
  EXPECT_TRUE(some_grade_fails);
}

TEST_F(TheoremFixture, ExplicitDivisorOverload) {
  const auto shift = chern_dold_inverse(ctx, cc("p1*a1*b1", 2, 2, kCoh));
  const Realization q(trivial.poly() + shift, sigma1, "perturbed");
  const auto report = theorem_harness(trivial, q, sigma1, cc("a1", 2, 2, kCoh), ctx);
  ASSERT_TRUE(report.division.divisible());
  EXPECT_EQ(*report.division.quotient, cc("-p1*b1", 2, 2, kCoh));
  EXPECT_FALSE(theorem_harness(trivial, q, sigma1, cc("a2", 2, 2, kCoh), ctx).division.divisible());
  EXPECT_THROW(theorem_harness(trivial, q, sigma1, cc("a1", 2, 2, kCob), ctx), UsageError);
  EXPECT_THROW(theorem_harness(trivial, q, SingularityId::sigma(2), SingularityId::sigma(3), ctx), UsageError);
  const auto line = realization_trivial(sigma1, 1, 1);
  EXPECT_THROW(theorem_harness(line, line, sigma1, SingularityId::sigma(2), ctx), UsageError);
}

}  // namespace
}  // namespace cobord
