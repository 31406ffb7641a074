#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobord/lambda_poly.hpp"

namespace cobord {

/// Ordered list of named polynomial variables with positive integer weights.
struct VariableSet {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;

  std::size_t size() const noexcept { return names.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

using VariablesPtr = std::shared_ptr<const VariableSet>;

VariablesPtr make_variables(std::vector<std::string> names, std::vector<std::uint32_t> weights);
/// All variables of weight one.
VariablesPtr make_unit_variables(std::vector<std::string> names);

/// Sparse polynomial in weighted variables with LambdaPoly coefficients.
///
/// This is the kernel behind truncated series, characteristic-class
/// polynomials and polynomials in elementary symmetric functions. The grade of
/// a monomial is the weighted sum of its exponents; the grade carried by the
/// Lambda coefficients is tracked separately by LambdaPoly.
class GradedPoly {
 public:
  using TermMap = std::map<Exponents, LambdaPoly>;

  GradedPoly(VariablesPtr variables, std::size_t cutoff);

  static GradedPoly constant(VariablesPtr variables, const LambdaPoly& value);
  static GradedPoly variable(VariablesPtr variables, std::size_t index, std::size_t cutoff);

  const VariablesPtr& variables() const noexcept { return variables_; }
  std::size_t cutoff() const noexcept { return cutoff_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LambdaPoly coefficient(const Exponents& exponents) const;
  LambdaPoly constant_term() const;

  int grade_of(const Exponents& exponents) const;
  std::optional<int> max_grade() const;
  std::optional<int> min_grade() const;

  void add_term(const Exponents& exponents, const LambdaPoly& coefficient);

  GradedPoly truncated(int max_grade) const;
  GradedPoly homogeneous_part(int grade) const;
  /// Applies p_i -> 0 to every coefficient.
  GradedPoly augmented() const;
  /// Reorders variables: exponent i of the result is exponent perm[i] of this.
  GradedPoly permuted(std::span<const std::size_t> perm) const;
  /// Same terms, reinterpreted over another variable set of equal size.
  GradedPoly relabeled(VariablesPtr variables) const;

  bool same_space(const GradedPoly& other) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& rhs);
  GradedPoly& operator-=(const GradedPoly& rhs);
  GradedPoly& operator*=(const LambdaPoly& scalar);
  GradedPoly& operator*=(const Rational& scalar);
  friend GradedPoly operator+(GradedPoly lhs, const GradedPoly& rhs) { return lhs += rhs; }
  friend GradedPoly operator-(GradedPoly lhs, const GradedPoly& rhs) { return lhs -= rhs; }
  friend GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs);
  friend GradedPoly operator*(GradedPoly lhs, const LambdaPoly& rhs) { return lhs *= rhs; }
  friend GradedPoly operator*(GradedPoly lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const GradedPoly& lhs, const GradedPoly& rhs);

 private:
  void require_same_space(const GradedPoly& other) const;

  VariablesPtr variables_;
  std::size_t cutoff_;
  TermMap terms_;
};

/// Product with every term of grade > max_grade dropped (never formed).
GradedPoly multiply_truncated(const GradedPoly& lhs, const GradedPoly& rhs, std::optional<int> max_grade);

GradedPoly power_truncated(const GradedPoly& base, std::uint32_t exponent, std::optional<int> max_grade);

/// Substitutes images[i] for variable i of `outer`. All images must share one
/// variable space; the result lives there and is truncated at max_grade.
GradedPoly substitute(const GradedPoly& outer, std::span<const GradedPoly> images, std::optional<int> max_grade);

/// Embeds a polynomial into a wider variable set: variable i of `poly`
/// becomes variable i + offset of `target`.
GradedPoly embed(const GradedPoly& poly, const VariablesPtr& target, std::size_t offset);

}  // namespace cobord
