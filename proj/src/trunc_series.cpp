#include "cobord/trunc_series.hpp"

#include <algorithm>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

void require_unit_weights(const GradedPoly& body) {
  for (auto w : body.variables()->weights) {
    if (w != 1) throw UsageError("series variables must have weight one");
  }
}

}  // namespace

TruncSeries::TruncSeries(std::vector<std::string> variables, int order, std::size_t cutoff)
    : body_(make_unit_variables(std::move(variables)), cutoff), order_(order) {
  if (order < 0) throw ConfigurationError("truncation order must be non-negative");
}

TruncSeries::TruncSeries(GradedPoly body, int order) : body_(body.truncated(order)), order_(order) {
  if (order < 0) throw ConfigurationError("truncation order must be non-negative");
  require_unit_weights(body_);
}

TruncSeries TruncSeries::variable(const std::vector<std::string>& variables, std::size_t index, int order,
                                  std::size_t cutoff) {
  return TruncSeries(GradedPoly::variable(make_unit_variables(variables), index, cutoff), order);
}

TruncSeries TruncSeries::constant(const std::vector<std::string>& variables, const LambdaPoly& value, int order) {
  return TruncSeries(GradedPoly::constant(make_unit_variables(variables), value), order);
}

LambdaPoly TruncSeries::coefficient(std::uint32_t power) const {
  if (arity() != 1) throw UsageError("single-index coefficient access needs a univariate series");
  return body_.coefficient(Exponents{power});
}

TruncSeries TruncSeries::with_order(int order) const {
  if (order > order_) throw TruncationError("cannot raise the truncation order of a series");
  return TruncSeries(body_, order);
}

TruncSeries TruncSeries::renamed(std::vector<std::string> variables) const {
  return TruncSeries(body_.relabeled(make_unit_variables(std::move(variables))), order_);
}

void TruncSeries::require_same_variables(const TruncSeries& other) const {
  if (body_.cutoff() != other.body_.cutoff()) throw ConfigurationError("generator cutoff mismatch");
  if (variables() != other.variables()) throw UsageError("series have different variable sets");
}

TruncSeries TruncSeries::operator-() const { return TruncSeries(-body_, order_); }

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_variables(rhs);
  order_ = std::min(order_, rhs.order_);
  body_ = (body_ + rhs.body_).truncated(order_);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_variables(rhs);
  order_ = std::min(order_, rhs.order_);
  body_ = (body_ - rhs.body_).truncated(order_);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  require_same_variables(rhs);
  order_ = std::min(order_, rhs.order_);
  body_ = multiply_truncated(body_, rhs.body_, order_);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const LambdaPoly& scalar) {
  body_ *= scalar;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& scalar) {
  body_ *= scalar;
  return *this;
}

bool operator==(const TruncSeries& lhs, const TruncSeries& rhs) {
  return lhs.order_ == rhs.order_ && lhs.body_ == rhs.body_;
}

TruncSeries series_substitute(const TruncSeries& outer, std::span<const TruncSeries> inners) {
  if (inners.size() != outer.arity()) throw UsageError("substitution needs one inner series per variable");
  if (inners.empty()) throw UsageError("substitution into a series without variables");
  int order = outer.order();
  std::vector<GradedPoly> images;
  images.reserve(inners.size());
  for (const auto& inner : inners) {
    if (inner.variables() != inners.front().variables()) {
      throw UsageError("inner series have different variable sets");
    }
    if (!inner.poly().constant_term().is_zero()) {
      throw DomainError("inner series must have zero constant term");
    }
    order = std::min(order, inner.order());
    images.push_back(inner.poly().relabeled(inners.front().poly().variables()));
  }
  return TruncSeries(substitute(outer.poly(), images, order), order);
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (outer.arity() != 1) throw UsageError("outer series of a composition must be univariate");
  return series_substitute(outer, std::span<const TruncSeries>(&inner, 1));
}

TruncSeries series_revert(const TruncSeries& series) {
  if (series.arity() != 1) throw UsageError("reversion needs a univariate series");
  if (!series.coefficient(0).is_zero()) throw DomainError("reversion needs zero constant term");
  if (series.coefficient(1) != LambdaPoly::constant(1, series.cutoff())) {
    throw DomainError("reversion needs unit linear coefficient");
  }
  const int order = series.order();
  TruncSeries result = TruncSeries::variable(series.variables(), 0, order, series.cutoff());
  // result is exact through degree k - 1; the t^k coefficient of
  // series(result) is then the correction needed at degree k.
  for (int k = 2; k <= order; ++k) {
    const LambdaPoly error = series_compose(series, result).coefficient(static_cast<std::uint32_t>(k));
    if (error.is_zero()) continue;
    GradedPoly correction(result.poly().variables(), series.cutoff());
    correction.add_term(Exponents{static_cast<std::uint32_t>(k)}, -error);
    result += TruncSeries(correction, order);
  }
  return result;
}

}  // namespace cobord
