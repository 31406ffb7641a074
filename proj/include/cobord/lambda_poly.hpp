#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

inline constexpr std::size_t kDefaultCutoff = 8;
inline constexpr int kDefaultOrder = 8;

/// Exponent vector of a monomial; position i holds the power of the i-th
/// variable of whatever space the monomial belongs to.
using Exponents = std::vector<std::uint32_t>;

/// Element of the rationalized cobordism coefficient ring Q[p1, ..., pK],
/// where p_i stands for the class of CP^i and has grade -i.
///
/// Terms are keyed by exponent vectors of length K. Zero coefficients are
/// never stored, so the zero polynomial is the empty map.
class LambdaPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit LambdaPoly(std::size_t cutoff = kDefaultCutoff);

  static LambdaPoly constant(const Rational& value, std::size_t cutoff = kDefaultCutoff);
  /// p_i for 1 <= i <= cutoff; p_0 is the unit.
  static LambdaPoly generator(std::size_t index, std::size_t cutoff = kDefaultCutoff);

  std::size_t cutoff() const noexcept { return cutoff_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term, i.e. the value at p_i = 0.
  Rational constant_term() const;
  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  static int grade_of(const Exponents& exponents);
  /// Common grade of all terms; nullopt for inhomogeneous values. Zero is
  /// homogeneous of every grade and reports 0.
  std::optional<int> homogeneous_grade() const;
  bool is_homogeneous() const { return homogeneous_grade().has_value(); }

  /// Adds c * p^exponents; the result is pruned if it cancels.
  void add_term(const Exponents& exponents, const Rational& coefficient);

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& rhs);
  LambdaPoly& operator-=(const LambdaPoly& rhs);
  LambdaPoly& operator*=(const Rational& scalar);
  friend LambdaPoly operator+(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs += rhs; }
  friend LambdaPoly operator-(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs -= rhs; }
  friend LambdaPoly operator*(const LambdaPoly& lhs, const LambdaPoly& rhs);
  friend LambdaPoly operator*(LambdaPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LambdaPoly operator*(const Rational& lhs, LambdaPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const LambdaPoly& lhs, const LambdaPoly& rhs);

 private:
  void require_same_cutoff(const LambdaPoly& other) const;

  std::size_t cutoff_;
  TermMap terms_;
};

/// The augmentation on coefficients: p_i -> 0 for every i >= 1.
Rational augment_coeffs(const LambdaPoly& value);

}  // namespace cobord
