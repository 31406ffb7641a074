#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"

namespace cobord {

/// Power series in one or more formal variables over Q[p1..pK], truncated at
/// a total variable-degree bound: terms of degree > order() are dropped.
///
/// Binary operations require equal variable lists and produce a result
/// truncated at the smaller of the two orders.
class TruncSeries {
 public:
  TruncSeries(std::vector<std::string> variables, int order, std::size_t cutoff = kDefaultCutoff);
  /// Truncates `body` at `order`. Every variable of `body` must have weight one.
  TruncSeries(GradedPoly body, int order);

  static TruncSeries variable(const std::vector<std::string>& variables, std::size_t index, int order,
                              std::size_t cutoff = kDefaultCutoff);
  static TruncSeries constant(const std::vector<std::string>& variables, const LambdaPoly& value, int order);

  const GradedPoly& poly() const noexcept { return body_; }
  const std::vector<std::string>& variables() const noexcept { return body_.variables()->names; }
  std::size_t arity() const noexcept { return body_.variables()->size(); }
  int order() const noexcept { return order_; }
  std::size_t cutoff() const noexcept { return body_.cutoff(); }
  bool is_zero() const noexcept { return body_.is_zero(); }

  LambdaPoly coefficient(const Exponents& exponents) const { return body_.coefficient(exponents); }
  /// Coefficient of t^k for a univariate series.
  LambdaPoly coefficient(std::uint32_t power) const;

  TruncSeries with_order(int order) const;
  TruncSeries renamed(std::vector<std::string> variables) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const LambdaPoly& scalar);
  TruncSeries& operator*=(const Rational& scalar);
  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const TruncSeries& rhs) { return lhs *= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const LambdaPoly& rhs) { return lhs *= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const Rational& rhs) { return lhs *= rhs; }

  /// Coefficientwise equality; the orders must agree as well.
  friend bool operator==(const TruncSeries& lhs, const TruncSeries& rhs);

 private:
  void require_same_variables(const TruncSeries& other) const;

  GradedPoly body_;
  int order_;
};

/// Substitutes `inner` into a univariate `outer`. The inner series must have
/// zero constant term; the result is truncated at min(order(outer), order(inner)).
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

/// Multivariate substitution: variable i of `outer` becomes inners[i]. All
/// inner series share one variable list and have zero constant term.
TruncSeries series_substitute(const TruncSeries& outer, std::span<const TruncSeries> inners);

/// Compositional inverse of a univariate series s = t + O(t^2).
TruncSeries series_revert(const TruncSeries& series);

}  // namespace cobord
