#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/graded_poly.hpp"
#include "cobord/trunc_series.hpp"

namespace cobord {

/// Whether a_i, b_j denote cobordism Chern classes c_i^U or ordinary
/// cohomological Chern classes c_i. The Chern-Dold character maps the first
/// kind to the second; mixing them is rejected.
enum class SymbolMode { Cobordism, Cohomology };

const char* to_string(SymbolMode mode);
SymbolMode symbol_mode_from_string(const std::string& text);

/// Polynomial in a_1..a_m (Chern classes of TM) and b_1..b_n (Chern classes
/// of f*TN) with Lambda coefficients. Both a_i and b_i have grade i.
class CharClassPoly {
 public:
  CharClassPoly(int m, int n, std::size_t cutoff = kDefaultCutoff, SymbolMode mode = SymbolMode::Cobordism);
  /// Wraps a polynomial whose variables are exactly a1..am, b1..bn.
  CharClassPoly(int m, int n, GradedPoly body, SymbolMode mode);

  static CharClassPoly constant(int m, int n, const LambdaPoly& value, SymbolMode mode = SymbolMode::Cobordism);
  static CharClassPoly a(int i, int m, int n, std::size_t cutoff = kDefaultCutoff,
                         SymbolMode mode = SymbolMode::Cobordism);
  static CharClassPoly b(int j, int m, int n, std::size_t cutoff = kDefaultCutoff,
                         SymbolMode mode = SymbolMode::Cobordism);

  static VariablesPtr variables_for(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  SymbolMode mode() const noexcept { return mode_; }
  std::size_t cutoff() const noexcept { return body_.cutoff(); }
  const GradedPoly& poly() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }

  std::optional<int> max_grade() const { return body_.max_grade(); }
  CharClassPoly truncated(int max_grade) const;
  CharClassPoly homogeneous_part(int grade) const;
  /// Coefficientwise augmentation p_i -> 0; the mode is kept.
  CharClassPoly augmented() const;
  CharClassPoly with_mode(SymbolMode mode) const;
  /// True when every coefficient is a constant (no p_i appear).
  bool has_constant_coefficients() const;

  CharClassPoly operator-() const;
  CharClassPoly& operator+=(const CharClassPoly& rhs);
  CharClassPoly& operator-=(const CharClassPoly& rhs);
  CharClassPoly& operator*=(const CharClassPoly& rhs);
  CharClassPoly& operator*=(const LambdaPoly& scalar);
  CharClassPoly& operator*=(const Rational& scalar);
  friend CharClassPoly operator+(CharClassPoly lhs, const CharClassPoly& rhs) { return lhs += rhs; }
  friend CharClassPoly operator-(CharClassPoly lhs, const CharClassPoly& rhs) { return lhs -= rhs; }
  friend CharClassPoly operator*(CharClassPoly lhs, const CharClassPoly& rhs) { return lhs *= rhs; }
  friend CharClassPoly operator*(CharClassPoly lhs, const LambdaPoly& rhs) { return lhs *= rhs; }
  friend CharClassPoly operator*(CharClassPoly lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const CharClassPoly& lhs, const CharClassPoly& rhs);

 private:
  void require_compatible(const CharClassPoly& other) const;

  int m_;
  int n_;
  SymbolMode mode_;
  GradedPoly body_;
};

/// Variables e1..er with weights 1..r.
VariablesPtr elementary_variables(int rank, const std::string& prefix = "e");

/// Rewrites an expression symmetric in all of its variables (the Chern
/// roots) as a polynomial in their elementary symmetric functions e1..er.
/// Throws DomainError when the input is not symmetric.
GradedPoly symmetric_reduce(const TruncSeries& roots_expression);

/// Symmetric reduction of one block of variables inside a larger polynomial.
/// Variables [begin, begin + count) must have weight one; they are replaced
/// in place by elementary symmetric functions named prefix1..prefix<count>.
GradedPoly symmetric_reduce_block(const GradedPoly& poly, std::size_t begin, std::size_t count,
                                  const std::string& prefix);

/// Substitutes e_i = i-th elementary symmetric polynomial of the given roots.
TruncSeries expand_elementary(const GradedPoly& elementary_poly, const std::vector<std::string>& roots, int order);

/// c1^U(det xi) for a rank-r bundle, as a polynomial in e_i = c_i^U(xi).
GradedPoly det_c1(const FglContext& ctx, int rank);

/// Chern classes c_1..c_order of the virtual bundle B - A where A has rank m
/// (classes a_i) and B has rank n (classes b_j): c(B) / c(A) by grade.
std::vector<CharClassPoly> quotient_chern(int m, int n, int order, std::size_t cutoff = kDefaultCutoff,
                                          SymbolMode mode = SymbolMode::Cohomology);

/// ch_U on a line-bundle class: exp_F read in the cohomological variable "t".
TruncSeries chern_dold_line(const FglContext& ctx);

/// Chern-Dold character of a polynomial in cobordism Chern classes, expressed
/// in cohomological Chern classes with Lambda_Q coefficients, truncated at
/// grade ctx.order(). Throws TruncationError when P has terms above that grade.
CharClassPoly chern_dold_poly(const FglContext& ctx, const CharClassPoly& poly);

/// Inverse of chern_dold_poly (Chern roots pass through log_F instead of exp_F).
CharClassPoly chern_dold_inverse(const FglContext& ctx, const CharClassPoly& poly);

}  // namespace cobord
