#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord/char_class.hpp"
#include "cobord/fgl.hpp"
#include "cobord/proj_space.hpp"

namespace cobord {

/// Sigma^r: points where the differential has kernel of dimension >= r.
/// Only equidimensional maps are modeled.
class SingularityId {
 public:
  static SingularityId sigma(int r);
  static SingularityId sigma1() { return sigma(1); }
  /// Accepts "sigma1", "sigma2", ...
  static SingularityId parse(const std::string& text);

  int r() const noexcept { return r_; }
  /// Grade (codimension) of the Thom polynomial: r^2.
  int codimension() const noexcept { return r_ * r_; }
  std::string name() const;

  friend bool operator==(const SingularityId&, const SingularityId&) = default;

 private:
  explicit SingularityId(int r) : r_(r) {}
  int r_;
};

/// Cohomological Thom polynomial: the Porteous determinant det(c_{r+j-i})
/// in the quotient Chern classes c(f*TN - TM). Requires m == n.
CharClassPoly thom_poly_cohomological(const SingularityId& singularity, int m, int n,
                                      std::size_t cutoff = kDefaultCutoff);

/// A cobordism realization: a Lambda-polynomial in a_i, b_j whose
/// augmentation equals the cohomological Thom polynomial of its target.
/// Validity is checked on construction.
class Realization {
 public:
  /// Throws DomainError if `poly` does not augment to the Thom polynomial.
  Realization(CharClassPoly poly, SingularityId target, std::string label);

  const CharClassPoly& poly() const noexcept { return poly_; }
  const SingularityId& target() const noexcept { return target_; }
  const std::string& label() const noexcept { return label_; }
  int rank() const noexcept { return poly_.m(); }

 private:
  CharClassPoly poly_;
  SingularityId target_;
  std::string label_;
};

/// True iff `candidate` augments exactly to the Thom polynomial of `singularity`.
bool check_realization(const CharClassPoly& candidate, const SingularityId& singularity);
bool check_realization(const Realization& realization, const SingularityId& singularity);

/// P_U = P_H with Thom-polynomial coefficients read in cobordism.
Realization realization_trivial(const SingularityId& singularity, int m, int n,
                                std::size_t cutoff = kDefaultCutoff);

/// P_1(Sigma^1) = c1^U(det(f*TN - TM)) = F(c1^U det f*TN, inverse(c1^U det TM)),
/// truncated at grade `order` (at most ctx.order()).
Realization realization_p1(const FglContext& ctx, int rank, int order);

/// lambda P + (1 - lambda) Q.
Realization combine_affine(const Realization& p, const Realization& q, long lambda);
/// Rational lambda is an extension beyond integer combinations and must be
/// requested explicitly.
Realization combine_affine(const Realization& p, const Realization& q, const Rational& lambda,
                           bool allow_rational);

struct LemmaReport {
  long d;
  ProjSpaceClass class_resolution;  // [3d-3]_F(x)
  ProjSpaceClass class_naive;       // (3d-3) x
  ProjSpaceClass difference;
  bool verdict;  // difference != 0
};

/// Critical curve of the degree-d self-map of CP^2: c1^U(nu^{3d-3}) against
/// the class (3d-3) x forced by the trivial realization.
LemmaReport lemma_check(const FglContext& ctx, long d);

struct DivisibilityReport {
  CharClassPoly numerator;
  CharClassPoly divisor;
  std::optional<CharClassPoly> quotient;
  CharClassPoly remainder;
  /// Quotient coefficients are p_i-polynomials with integer coefficients.
  bool integral_flag;

  bool divisible() const { return quotient.has_value(); }
};

/// Exact division in Lambda_Q[a, b] = Q[p, a, b] by a single polynomial.
/// A single polynomial is a Groebner basis of its ideal, so a zero remainder
/// is equivalent to divisibility. Throws UsageError for a zero divisor.
DivisibilityReport divisibility_check(const CharClassPoly& numerator, const CharClassPoly& divisor);

struct GradeVerdict {
  int grade;
  bool divisible;
};

struct TheoremReport {
  CharClassPoly difference;      // P - Q in cobordism symbols
  CharClassPoly character;       // ch_U(P - Q) in cohomology symbols
  DivisibilityReport division;
  std::vector<GradeVerdict> per_grade;  // grades 0..ctx.order()
};

/// ch_U(P - Q) checked for divisibility by the Thom polynomial of `singular_locus`.
TheoremReport theorem_harness(const Realization& p, const Realization& q, const SingularityId& singularity,
                              const SingularityId& singular_locus, const FglContext& ctx);
/// Same, with an arbitrary (cohomology-mode) divisor.
TheoremReport theorem_harness(const Realization& p, const Realization& q, const SingularityId& singularity,
                              const CharClassPoly& divisor, const FglContext& ctx);

}  // namespace cobord
