#include "cobord/proj_space.hpp"

#include <array>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

void require_order_covers(const FglContext& ctx, int n) {
  if (ctx.order() < n) {
    throw TruncationError("context order " + std::to_string(ctx.order()) + " is below dim CP^" + std::to_string(n));
  }
}

}  // namespace

ProjSpaceClass::ProjSpaceClass(int n, std::size_t cutoff) : series_({"x"}, n, cutoff) {}

ProjSpaceClass ProjSpaceClass::from_series(const TruncSeries& series, int n) {
  if (series.arity() != 1) throw UsageError("a class on CP^n comes from a univariate series");
  if (series.order() < n) {
    throw TruncationError("series of order " + std::to_string(series.order()) + " does not determine a class on CP^" +
                          std::to_string(n));
  }
  return ProjSpaceClass(series.renamed({"x"}).with_order(n));
}

ProjSpaceClass ProjSpaceClass::x_power(int n, std::uint32_t power, std::size_t cutoff) {
  GradedPoly body(make_unit_variables({"x"}), cutoff);
  body.add_term(Exponents{power}, LambdaPoly::constant(1, cutoff));
  return ProjSpaceClass(TruncSeries(body, n));
}

ProjSpaceClass ProjSpaceClass::constant(int n, const LambdaPoly& value) {
  return ProjSpaceClass(TruncSeries::constant({"x"}, value, n));
}

ProjSpaceClass ProjSpaceClass::operator-() const { return ProjSpaceClass(-series_); }

ProjSpaceClass& ProjSpaceClass::operator+=(const ProjSpaceClass& rhs) {
  if (dim() != rhs.dim()) throw UsageError("classes on projective spaces of different dimension");
  series_ += rhs.series_;
  return *this;
}

ProjSpaceClass& ProjSpaceClass::operator-=(const ProjSpaceClass& rhs) {
  if (dim() != rhs.dim()) throw UsageError("classes on projective spaces of different dimension");
  series_ -= rhs.series_;
  return *this;
}

ProjSpaceClass& ProjSpaceClass::operator*=(const ProjSpaceClass& rhs) {
  if (dim() != rhs.dim()) throw UsageError("classes on projective spaces of different dimension");
  series_ *= rhs.series_;
  return *this;
}

ProjSpaceClass& ProjSpaceClass::operator*=(const LambdaPoly& scalar) {
  series_ *= scalar;
  return *this;
}

ProjSpaceClass& ProjSpaceClass::operator*=(const Rational& scalar) {
  series_ *= scalar;
  return *this;
}

MapModel::MapModel(int n_, long d_) : n(n_), d(d_) {
  if (n < 1) throw DomainError("projective space dimension must be at least 1");
  if (d < 1) throw DomainError("map parameter d must be at least 1");
}

ProjSpaceClass line_power_class(const FglContext& ctx, int n, long k) {
  require_order_covers(ctx, n);
  return ProjSpaceClass::from_series(k_series(ctx, k), n);
}

namespace {

// c_1..c_n of a rank-n bundle stably equal to (n+1) copies of a line bundle
// with first Chern class y: c_i = C(n+1, i) y^i.
std::vector<ProjSpaceClass> chern_of_multiple(const ProjSpaceClass& y, int n) {
  std::vector<ProjSpaceClass> classes;
  ProjSpaceClass power = ProjSpaceClass::constant(n, LambdaPoly::constant(1, y.cutoff()));
  for (int i = 1; i <= n; ++i) {
    power *= y;
    classes.push_back(power * binomial(n + 1, i));
  }
  return classes;
}

}  // namespace

std::vector<ProjSpaceClass> tangent_chern(const FglContext& ctx, int n) {
  if (n < 1) throw DomainError("projective space dimension must be at least 1");
  return chern_of_multiple(ProjSpaceClass::x_power(n, 1, ctx.cutoff()), n);
}

std::vector<ProjSpaceClass> pullback_tangent_chern(const FglContext& ctx, const MapModel& map) {
  return chern_of_multiple(line_power_class(ctx, map.n, map.d), map.n);
}

ProjSpaceClass epsilon_space(const ProjSpaceClass& value) {
  return ProjSpaceClass::from_series(TruncSeries(value.series().poly().augmented(), value.dim()), value.dim());
}

ProjSpaceClass fgl_add(const FglContext& ctx, const ProjSpaceClass& u, const ProjSpaceClass& v) {
  if (u.dim() != v.dim()) throw UsageError("classes on projective spaces of different dimension");
  require_order_covers(ctx, u.dim());
  const std::array<TruncSeries, 2> inner{u.series(), v.series()};
  return ProjSpaceClass::from_series(series_substitute(ctx.sum(), inner), u.dim());
}

ProjSpaceClass evaluate_char_poly(const CharClassPoly& poly, const MapModel& map, const FglContext& ctx) {
  if (poly.mode() != SymbolMode::Cobordism) throw DomainError("evaluation needs cobordism Chern-class symbols");
  if (poly.m() != map.n || poly.n() != map.n) {
    throw UsageError("polynomial ranks (" + std::to_string(poly.m()) + ", " + std::to_string(poly.n()) +
                     ") do not match CP^" + std::to_string(map.n));
  }
  if (poly.cutoff() != ctx.cutoff()) throw ConfigurationError("generator cutoff mismatch with the context");
  std::vector<GradedPoly> images;
  for (const auto& c : tangent_chern(ctx, map.n)) images.push_back(c.series().poly());
  for (const auto& c : pullback_tangent_chern(ctx, map)) images.push_back(c.series().poly());
  return ProjSpaceClass::from_series(TruncSeries(substitute(poly.poly(), images, map.n), map.n), map.n);
}

}  // namespace cobord
