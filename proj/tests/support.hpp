#pragma once

#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/char_class.hpp"
#include "cobord/cli/expr.hpp"
#include "cobord/cli/render.hpp"
#include "cobord/lambda_poly.hpp"
#include "cobord/proj_space.hpp"
#include "cobord/trunc_series.hpp"

namespace cobord {

// Readable gtest failure messages.
inline void PrintTo(const Rational& value, std::ostream* os) { *os << value.to_string(); }
inline void PrintTo(const GradedPoly& value, std::ostream* os) { *os << cli::to_text(value); }
inline void PrintTo(const LambdaPoly& value, std::ostream* os) {
  GradedPoly poly(make_unit_variables({}), value.cutoff());
  poly.add_term({}, value);
  *os << cli::to_text(poly);
}
inline void PrintTo(const TruncSeries& value, std::ostream* os) {
  *os << cli::to_text(value.poly()) << " + O(" << value.order() + 1 << ")";
}
inline void PrintTo(const CharClassPoly& value, std::ostream* os) {
  *os << "[" << to_string(value.mode()) << "] " << cli::to_text(value.poly());
}
inline void PrintTo(const ProjSpaceClass& value, std::ostream* os) { PrintTo(value.series(), os); }

}  // namespace cobord

namespace cobord::testing {

inline GradedPoly parse_poly(std::string_view src, const VariablesPtr& vars, std::size_t cutoff = kDefaultCutoff) {
  return cli::evaluate_expr(*cli::parse_expr(src), vars, cutoff);
}

inline LambdaPoly lam(std::string_view src, std::size_t cutoff = kDefaultCutoff) {
  return parse_poly(src, make_unit_variables({}), cutoff).constant_term();
}

inline TruncSeries series(std::string_view src, const std::vector<std::string>& vars, int order,
                          std::size_t cutoff = kDefaultCutoff) {
  return TruncSeries(parse_poly(src, make_unit_variables(vars), cutoff), order);
}

inline CharClassPoly cc(std::string_view src, int m, int n, SymbolMode mode = SymbolMode::Cobordism,
                        std::size_t cutoff = kDefaultCutoff) {
  return CharClassPoly(m, n, parse_poly(src, CharClassPoly::variables_for(m, n), cutoff), mode);
}

inline GradedPoly elem(std::string_view src, int rank, std::size_t cutoff = kDefaultCutoff) {
  return parse_poly(src, elementary_variables(rank), cutoff);
}

inline ProjSpaceClass proj(std::string_view src, int n, std::size_t cutoff = kDefaultCutoff) {
  return ProjSpaceClass::from_series(series(src, {"x"}, n, cutoff), n);
}

/// All exponent vectors over `weights` with weighted degree exactly `degree`.
inline std::vector<Exponents> monomials_of_weight(const std::vector<std::uint32_t>& weights, int degree) {
  std::vector<Exponents> out;
  Exponents current(weights.size(), 0);
  auto rec = [&](auto& self, std::size_t index, int remaining) -> void {
    if (index == weights.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int e = 0; e * static_cast<int>(weights[index]) <= remaining; ++e) {
      current[index] = static_cast<std::uint32_t>(e);
      self(self, index + 1, remaining - e * static_cast<int>(weights[index]));
    }
    current[index] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = 0;
    while (n == 0) n = num(rng_);
    return Rational(n, den(rng_));
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Homogeneous element of Lambda_Q of grade -weight (weight <= cutoff).
  LambdaPoly lambda(int weight, std::size_t cutoff = kDefaultCutoff) {
    std::vector<std::uint32_t> weights(cutoff);
    for (std::size_t i = 0; i < cutoff; ++i) weights[i] = static_cast<std::uint32_t>(i + 1);
    LambdaPoly out(cutoff);
    for (const auto& e : monomials_of_weight(weights, weight)) {
      if (coin(0.6)) out.add_term(e, coefficient());
    }
    if (out.is_zero()) out.add_term(monomials_of_weight(weights, weight).front(), coefficient());
    return out;
  }

  /// Polynomial homogeneous of total grade `grade` (variable weight minus
  /// Lambda weight), variable weights between grade and grade + spread.
  GradedPoly graded(const VariablesPtr& vars, int grade, int max_degree, std::size_t cutoff = kDefaultCutoff) {
    GradedPoly out(vars, cutoff);
    for (int degree = std::max(grade, 0); degree <= max_degree; ++degree) {
      const int weight = degree - grade;
      if (weight < 0 || static_cast<std::size_t>(weight) > cutoff) continue;
      for (const auto& e : monomials_of_weight(vars->weights, degree)) {
        if (coin(0.35)) out.add_term(e, lambda(weight, cutoff));
      }
    }
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace cobord::testing
