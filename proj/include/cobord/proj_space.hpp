#pragma once

#include <cstddef>
#include <vector>

#include "cobord/char_class.hpp"
#include "cobord/fgl.hpp"
#include "cobord/trunc_series.hpp"

namespace cobord {

/// Element of U*(CP^n) (x) Q = Lambda_Q[x] / (x^{n+1}), x = c1^U of the dual
/// of the tautological line bundle. Arithmetic is exact: x^{n+1} = 0 is a ring
/// relation, realized as truncation of a univariate series at order n.
class ProjSpaceClass {
 public:
  explicit ProjSpaceClass(int n, std::size_t cutoff = kDefaultCutoff);
  /// Reduces a univariate series modulo x^{n+1}; needs series.order() >= n.
  static ProjSpaceClass from_series(const TruncSeries& series, int n);
  static ProjSpaceClass x_power(int n, std::uint32_t power, std::size_t cutoff = kDefaultCutoff);
  static ProjSpaceClass constant(int n, const LambdaPoly& value);

  int dim() const noexcept { return series_.order(); }
  std::size_t cutoff() const noexcept { return series_.cutoff(); }
  const TruncSeries& series() const noexcept { return series_; }
  LambdaPoly coefficient(std::uint32_t power) const { return series_.coefficient(power); }
  bool is_zero() const noexcept { return series_.is_zero(); }

  ProjSpaceClass operator-() const;
  ProjSpaceClass& operator+=(const ProjSpaceClass& rhs);
  ProjSpaceClass& operator-=(const ProjSpaceClass& rhs);
  ProjSpaceClass& operator*=(const ProjSpaceClass& rhs);
  ProjSpaceClass& operator*=(const LambdaPoly& scalar);
  ProjSpaceClass& operator*=(const Rational& scalar);
  friend ProjSpaceClass operator+(ProjSpaceClass lhs, const ProjSpaceClass& rhs) { return lhs += rhs; }
  friend ProjSpaceClass operator-(ProjSpaceClass lhs, const ProjSpaceClass& rhs) { return lhs -= rhs; }
  friend ProjSpaceClass operator*(ProjSpaceClass lhs, const ProjSpaceClass& rhs) { return lhs *= rhs; }
  friend ProjSpaceClass operator*(ProjSpaceClass lhs, const LambdaPoly& rhs) { return lhs *= rhs; }
  friend ProjSpaceClass operator*(ProjSpaceClass lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const ProjSpaceClass& lhs, const ProjSpaceClass& rhs) = default;

 private:
  explicit ProjSpaceClass(TruncSeries series) : series_(std::move(series)) {}

  TruncSeries series_;
};

/// Self-map f: CP^n -> CP^n with f*(nu) = nu^{(x) d}. On H^2 it multiplies by
/// d, so its topological degree is d^n (d^2 on CP^2).
struct MapModel {
  MapModel(int n, long d);

  int n;
  long d;
};

/// [k]_F(x) in U*(CP^n), i.e. c1^U(nu^{(x) k}).
ProjSpaceClass line_power_class(const FglContext& ctx, int n, long k);

/// c_1^U .. c_n^U of T(CP^n), from T(CP^n) + 1 = (n+1) nu: total class (1+x)^{n+1}.
std::vector<ProjSpaceClass> tangent_chern(const FglContext& ctx, int n);

/// c_i^U(f*T CP^n) = coefficients of (1 + [d]_F(x))^{n+1}.
std::vector<ProjSpaceClass> pullback_tangent_chern(const FglContext& ctx, const MapModel& map);

/// Coefficientwise augmentation: the image of a class in H*(CP^n; Q).
ProjSpaceClass epsilon_space(const ProjSpaceClass& value);

/// F(u, v) computed inside U*(CP^n).
ProjSpaceClass fgl_add(const FglContext& ctx, const ProjSpaceClass& u, const ProjSpaceClass& v);

/// Substitutes a_i -> c_i^U(T CP^n), b_j -> c_j^U(f*T CP^n). P must carry
/// cobordism symbols with ranks (n, n).
ProjSpaceClass evaluate_char_poly(const CharClassPoly& poly, const MapModel& map, const FglContext& ctx);

}  // namespace cobord
