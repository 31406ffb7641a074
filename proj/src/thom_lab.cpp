#include "cobord/thom_lab.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "cobord/errors.hpp"

namespace cobord {

SingularityId SingularityId::sigma(int r) {
  if (r < 1) throw UsageError("Sigma^r needs r >= 1");
  return SingularityId(r);
}

SingularityId SingularityId::parse(const std::string& text) {
  const std::string prefix = "sigma";
  if (text.size() > prefix.size() && text.compare(0, prefix.size(), prefix) == 0 &&
      std::all_of(text.begin() + static_cast<long>(prefix.size()), text.end(),
                  [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    return sigma(std::stoi(text.substr(prefix.size())));
  }
  throw UsageError("unknown singularity '" + text + "' (expected sigma1, sigma2, ...)");
}

std::string SingularityId::name() const { return "sigma" + std::to_string(r_); }

namespace {

CharClassPoly determinant(const std::vector<std::vector<CharClassPoly>>& matrix, const CharClassPoly& one) {
  const std::size_t size = matrix.size();
  if (size == 0) return one;
  if (size == 1) return matrix[0][0];
  CharClassPoly total = one * Rational(0);
  for (std::size_t col = 0; col < size; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<CharClassPoly>> minor;
    for (std::size_t row = 1; row < size; ++row) {
      std::vector<CharClassPoly> line;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) line.push_back(matrix[row][c]);
      }
      minor.push_back(std::move(line));
    }
    CharClassPoly term = matrix[0][col] * determinant(minor, one);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

CharClassPoly thom_poly_cohomological(const SingularityId& singularity, int m, int n, std::size_t cutoff) {
  if (m != n) {
    throw ConfigurationError("Thom polynomials are modeled for equidimensional maps only (m = n), got m = " +
                             std::to_string(m) + ", n = " + std::to_string(n));
  }
  const int r = singularity.r();
  const auto classes = quotient_chern(m, n, 2 * r - 1, cutoff, SymbolMode::Cohomology);
  const CharClassPoly one = CharClassPoly::constant(m, n, LambdaPoly::constant(1, cutoff), SymbolMode::Cohomology);
  const CharClassPoly zero = one * Rational(0);
  auto c = [&](int k) -> const CharClassPoly& {
    if (k == 0) return one;
    if (k < 0) return zero;
    return classes[static_cast<std::size_t>(k - 1)];
  };
  std::vector<std::vector<CharClassPoly>> matrix;
  for (int i = 1; i <= r; ++i) {
    std::vector<CharClassPoly> row;
    for (int j = 1; j <= r; ++j) row.push_back(c(r + j - i));
    matrix.push_back(std::move(row));
  }
  return determinant(matrix, one);
}

bool check_realization(const CharClassPoly& candidate, const SingularityId& singularity) {
  if (candidate.m() != candidate.n()) throw UsageError("realizations are modeled for equal ranks only");
  const CharClassPoly thom = thom_poly_cohomological(singularity, candidate.m(), candidate.n(), candidate.cutoff());
  return candidate.augmented().poly() == thom.poly();
}

bool check_realization(const Realization& realization, const SingularityId& singularity) {
  return check_realization(realization.poly(), singularity);
}

Realization::Realization(CharClassPoly poly, SingularityId target, std::string label)
    : poly_(std::move(poly)), target_(target), label_(std::move(label)) {
  if (poly_.mode() != SymbolMode::Cobordism) throw DomainError("a realization is written in cobordism Chern classes");
  if (!check_realization(poly_, target_)) {
    throw DomainError("polynomial does not augment to the Thom polynomial of " + target_.name());
  }
}

Realization realization_trivial(const SingularityId& singularity, int m, int n, std::size_t cutoff) {
  return Realization(thom_poly_cohomological(singularity, m, n, cutoff).with_mode(SymbolMode::Cobordism), singularity,
                     "trivial");
}

Realization realization_p1(const FglContext& ctx, int rank, int order) {
  if (rank < 1) throw UsageError("rank must be at least 1");
  if (order < 1) throw ConfigurationError("order must be at least 1");
  if (order > ctx.order()) {
    throw TruncationError("requested order " + std::to_string(order) + " exceeds the context order " +
                          std::to_string(ctx.order()));
  }
  const VariablesPtr vars = CharClassPoly::variables_for(rank, rank);
  const GradedPoly det = det_c1(ctx, rank);
  const GradedPoly det_tm = embed(det, vars, 0);
  const GradedPoly det_ftn = embed(det, vars, static_cast<std::size_t>(rank));
  const std::array<GradedPoly, 1> inverse_arg{det_tm};
  const GradedPoly inverse_tm = substitute(ctx.inverse().poly(), inverse_arg, order);
  const std::array<GradedPoly, 2> sum_args{det_ftn, inverse_tm};
  CharClassPoly poly(rank, rank, substitute(ctx.sum().poly(), sum_args, order), SymbolMode::Cobordism);
  return Realization(std::move(poly), SingularityId::sigma1(), "p1");
}

Realization combine_affine(const Realization& p, const Realization& q, long lambda) {
  return combine_affine(p, q, Rational(lambda), false);
}

Realization combine_affine(const Realization& p, const Realization& q, const Rational& lambda, bool allow_rational) {
  if (!lambda.is_integer() && !allow_rational) {
    throw UsageError("non-integer lambda " + lambda.to_string() + " requires the rational extension flag");
  }
  if (p.target() != q.target()) throw UsageError("realizations target different singularities");
  if (p.poly().m() != q.poly().m() || p.poly().n() != q.poly().n()) {
    throw UsageError("realizations have different ranks");
  }
  CharClassPoly poly = p.poly() * lambda + q.poly() * (Rational(1) - lambda);
  return Realization(std::move(poly), p.target(),
                     lambda.to_string() + "*(" + p.label() + ") + " + (Rational(1) - lambda).to_string() + "*(" +
                         q.label() + ")");
}

LemmaReport lemma_check(const FglContext& ctx, long d) {
  if (d < 1) throw DomainError("lemma_check needs d >= 1");
  const long k = 3 * d - 3;
  ProjSpaceClass resolution = line_power_class(ctx, 2, k);
  ProjSpaceClass naive = ProjSpaceClass::x_power(2, 1, ctx.cutoff()) * Rational(k);
  ProjSpaceClass difference = resolution - naive;
  const bool verdict = !difference.is_zero();
  return LemmaReport{d, std::move(resolution), std::move(naive), std::move(difference), verdict};
}

// ---------------------------------------------------------------------------
// Division in Q[p][a, b]: block order, (a, b) part first by weighted degree
// then lexicographically, Lambda part by |grade| then lexicographically.

namespace {

struct LeadingTerm {
  Exponents outer;
  Exponents inner;
  Rational coefficient;
};

bool outer_less(const GradedPoly& poly, const Exponents& lhs, const Exponents& rhs) {
  const int lg = poly.grade_of(lhs);
  const int rg = poly.grade_of(rhs);
  if (lg != rg) return lg < rg;
  return lhs < rhs;
}

bool inner_less(const Exponents& lhs, const Exponents& rhs) {
  const int lg = -LambdaPoly::grade_of(lhs);
  const int rg = -LambdaPoly::grade_of(rhs);
  if (lg != rg) return lg < rg;
  return lhs < rhs;
}

LeadingTerm leading_term(const GradedPoly& poly) {
  auto lead = poly.terms().begin();
  for (auto it = std::next(lead); it != poly.terms().end(); ++it) {
    if (outer_less(poly, lead->first, it->first)) lead = it;
  }
  const auto& coefficient = lead->second.terms();
  auto inner = coefficient.begin();
  for (auto it = std::next(inner); it != coefficient.end(); ++it) {
    if (inner_less(inner->first, it->first)) inner = it;
  }
  return LeadingTerm{lead->first, inner->first, inner->second};
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponents difference_of(const Exponents& big, const Exponents& small) {
  Exponents out(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) out[i] = big[i] - small[i];
  return out;
}

GradedPoly monomial(const GradedPoly& like, const Exponents& outer, const Exponents& inner, const Rational& c) {
  LambdaPoly coefficient(like.cutoff());
  coefficient.add_term(inner, c);
  GradedPoly result(like.variables(), like.cutoff());
  result.add_term(outer, coefficient);
  return result;
}

}  // namespace

DivisibilityReport divisibility_check(const CharClassPoly& numerator, const CharClassPoly& divisor) {
  if (numerator.m() != divisor.m() || numerator.n() != divisor.n()) {
    throw UsageError("numerator and divisor have different ranks");
  }
  if (numerator.mode() != divisor.mode()) throw UsageError("numerator and divisor use different symbol modes");
  if (numerator.cutoff() != divisor.cutoff()) throw ConfigurationError("generator cutoff mismatch");
  if (divisor.is_zero()) throw UsageError("division by the zero polynomial");

  const GradedPoly& t = divisor.poly();
  const LeadingTerm lead_t = leading_term(t);
  GradedPoly rest = numerator.poly();
  GradedPoly quotient(t.variables(), t.cutoff());
  GradedPoly remainder(t.variables(), t.cutoff());
  while (!rest.is_zero()) {
    const LeadingTerm lead = leading_term(rest);
    if (divides(lead_t.outer, lead.outer) && divides(lead_t.inner, lead.inner)) {
      const GradedPoly q = monomial(t, difference_of(lead.outer, lead_t.outer), difference_of(lead.inner, lead_t.inner),
                                    lead.coefficient / lead_t.coefficient);
      quotient += q;
      rest -= q * t;
    } else {
      const GradedPoly term = monomial(t, lead.outer, lead.inner, lead.coefficient);
      remainder += term;
      rest -= term;
    }
  }

  const int m = numerator.m();
  const int n = numerator.n();
  DivisibilityReport report{numerator, divisor, std::nullopt, CharClassPoly(m, n, remainder, numerator.mode()), false};
  if (remainder.is_zero()) {
    CharClassPoly q(m, n, quotient, numerator.mode());
    report.integral_flag = std::all_of(quotient.terms().begin(), quotient.terms().end(),
                                       [](const auto& term) { return term.second.has_integer_coefficients(); });
    report.quotient = std::move(q);
  }
  return report;
}

TheoremReport theorem_harness(const Realization& p, const Realization& q, const SingularityId& singularity,
                              const SingularityId& singular_locus, const FglContext& ctx) {
  CharClassPoly divisor = thom_poly_cohomological(singular_locus, p.rank(), p.rank(), ctx.cutoff());
  if (divisor.is_zero()) {
    throw UsageError("the Thom polynomial of " + singular_locus.name() + " vanishes in rank " +
                     std::to_string(p.rank()) + "; choose a larger rank or an explicit divisor");
  }
  return theorem_harness(p, q, singularity, divisor, ctx);
}

TheoremReport theorem_harness(const Realization& p, const Realization& q, const SingularityId& singularity,
                              const CharClassPoly& divisor, const FglContext& ctx) {
  if (p.target() != singularity || q.target() != singularity) {
    throw UsageError("both realizations must target " + singularity.name());
  }
  if (divisor.mode() != SymbolMode::Cohomology) throw UsageError("the divisor must use cohomology symbols");
  CharClassPoly difference = p.poly() - q.poly();
  CharClassPoly character = chern_dold_poly(ctx, difference);
  DivisibilityReport division = divisibility_check(character, divisor);
  std::vector<GradeVerdict> per_grade;
  for (int g = 0; g <= ctx.order(); ++g) {
    per_grade.push_back(GradeVerdict{g, divisibility_check(character.homogeneous_part(g), divisor).divisible()});
  }
  return TheoremReport{std::move(difference), std::move(character), std::move(division), std::move(per_grade)};
}

}  // namespace cobord
