#include "cobord/fgl.hpp"

#include <algorithm>
#include <array>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

TruncSeries mishchenko_log(int order, std::size_t cutoff) {
  GradedPoly body(make_unit_variables({"x"}), cutoff);
  for (int i = 0; i < order; ++i) {
    body.add_term(Exponents{static_cast<std::uint32_t>(i + 1)},
                  LambdaPoly::generator(static_cast<std::size_t>(i), cutoff) * Rational(1, i + 1));
  }
  return TruncSeries(body, order);
}

// log applied to each variable of `variables` separately, summed.
TruncSeries sum_of_logs(const TruncSeries& log, const std::vector<std::string>& variables, int order) {
  TruncSeries total(variables, order, log.cutoff());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    total += series_compose(log, TruncSeries::variable(variables, i, order, log.cutoff()));
  }
  return total;
}

}  // namespace

FglContext::FglContext(int order, std::size_t cutoff, TruncSeries log, TruncSeries exp, TruncSeries sum,
                       TruncSeries inverse)
    : order_(order),
      cutoff_(cutoff),
      log_(std::move(log)),
      exp_(std::move(exp)),
      sum_(std::move(sum)),
      inverse_(std::move(inverse)) {}

FglContext FglContext::build(int order) {
  return build(order, std::max<std::size_t>(static_cast<std::size_t>(std::max(order, 0)), kDefaultCutoff));
}

FglContext FglContext::build(int order, std::size_t cutoff) {
  if (order < 1) throw ConfigurationError("formal group law order must be at least 1");
  if (cutoff + 1 < static_cast<std::size_t>(order)) {
    throw ConfigurationError("order " + std::to_string(order) + " needs generators up to p" +
                             std::to_string(order - 1) + " but the cutoff is " + std::to_string(cutoff));
  }
  TruncSeries log = mishchenko_log(order, cutoff);
  TruncSeries exp = series_revert(log);
  TruncSeries sum = series_compose(exp, sum_of_logs(log, {"x", "y"}, order));
  TruncSeries inverse = series_compose(exp, -log);
  return FglContext(order, cutoff, std::move(log), std::move(exp), std::move(sum), std::move(inverse));
}

TruncSeries k_series(const FglContext& ctx, long k) {
  if (k == 0) return TruncSeries({"x"}, ctx.order(), ctx.cutoff());
  return series_compose(ctx.exp(), ctx.log() * Rational(k));
}

TruncSeries nary_sum(const FglContext& ctx, const std::vector<std::string>& variables) {
  if (variables.empty()) throw UsageError("n-ary formal sum needs at least one variable");
  // exp(sum log x_i) is the iterated F-sum; F is associative and commutative.
  return series_compose(ctx.exp(), sum_of_logs(ctx.log(), variables, ctx.order()));
}

TruncSeries fgl_add(const FglContext& ctx, const TruncSeries& u, const TruncSeries& v) {
  const std::array<TruncSeries, 2> inner{u, v};
  return series_substitute(ctx.sum(), inner);
}

}  // namespace cobord
