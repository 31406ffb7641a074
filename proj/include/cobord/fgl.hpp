#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobord/trunc_series.hpp"

namespace cobord {

/// The rationalized universal formal group law of complex cobordism,
/// truncated at a fixed order.
///
/// log(x) = sum_{i>=0} p_i x^{i+1} / (i+1) with p_0 = 1 (Mishchenko), exp is
/// its compositional inverse, F(x, y) = exp(log x + log y) and the inverse
/// series satisfies F(x, inverse(x)) = 0. With this logarithm the
/// xy-coefficient of F is -p_1.
///
/// Immutable once built. Build one per order and share it.
class FglContext {
 public:
  /// Uses cutoff max(order, kDefaultCutoff).
  static FglContext build(int order);
  /// Requires order >= 1 and cutoff >= order - 1 (log needs p_1..p_{order-1}).
  static FglContext build(int order, std::size_t cutoff);

  int order() const noexcept { return order_; }
  std::size_t cutoff() const noexcept { return cutoff_; }

  /// Univariate series in "x".
  const TruncSeries& log() const noexcept { return log_; }
  const TruncSeries& exp() const noexcept { return exp_; }
  const TruncSeries& inverse() const noexcept { return inverse_; }
  /// F(x, y) in variables "x", "y".
  const TruncSeries& sum() const noexcept { return sum_; }

 private:
  FglContext(int order, std::size_t cutoff, TruncSeries log, TruncSeries exp, TruncSeries sum,
             TruncSeries inverse);

  int order_;
  std::size_t cutoff_;
  TruncSeries log_;
  TruncSeries exp_;
  TruncSeries sum_;
  TruncSeries inverse_;
};

/// [k]_F(x) = exp(k log x), i.e. c1 of the k-th tensor power of a line bundle.
TruncSeries k_series(const FglContext& ctx, long k);

/// F(x1, F(x2, ..., F(x_{r-1}, x_r))) in the given variables.
TruncSeries nary_sum(const FglContext& ctx, const std::vector<std::string>& variables);

/// F(u, v) for two series in a common variable list with zero constant term.
TruncSeries fgl_add(const FglContext& ctx, const TruncSeries& u, const TruncSeries& v);

}  // namespace cobord
