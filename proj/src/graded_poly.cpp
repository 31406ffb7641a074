#include "cobord/graded_poly.hpp"

#include <algorithm>

#include "cobord/errors.hpp"

namespace cobord {

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

VariablesPtr make_variables(std::vector<std::string> names, std::vector<std::uint32_t> weights) {
  if (names.size() != weights.size()) throw UsageError("variable names and weights differ in length");
  for (auto w : weights) {
    if (w == 0) throw UsageError("variable weights must be positive");
  }
  return std::make_shared<const VariableSet>(VariableSet{std::move(names), std::move(weights)});
}

VariablesPtr make_unit_variables(std::vector<std::string> names) {
  std::vector<std::uint32_t> weights(names.size(), 1);
  return make_variables(std::move(names), std::move(weights));
}

GradedPoly::GradedPoly(VariablesPtr variables, std::size_t cutoff)
    : variables_(std::move(variables)), cutoff_(cutoff) {
  if (!variables_) throw UsageError("null variable set");
  if (cutoff_ == 0) throw ConfigurationError("generator cutoff must be positive");
}

GradedPoly GradedPoly::constant(VariablesPtr variables, const LambdaPoly& value) {
  GradedPoly result(variables, value.cutoff());
  result.add_term(Exponents(variables->size(), 0), value);
  return result;
}

GradedPoly GradedPoly::variable(VariablesPtr variables, std::size_t index, std::size_t cutoff) {
  if (index >= variables->size()) throw UsageError("variable index out of range");
  GradedPoly result(variables, cutoff);
  Exponents e(variables->size(), 0);
  e[index] = 1;
  result.add_term(e, LambdaPoly::constant(1, cutoff));
  return result;
}

LambdaPoly GradedPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? LambdaPoly(cutoff_) : it->second;
}

LambdaPoly GradedPoly::constant_term() const { return coefficient(Exponents(variables_->size(), 0)); }

int GradedPoly::grade_of(const Exponents& exponents) const {
  int grade = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    grade += static_cast<int>(variables_->weights[i] * exponents[i]);
  }
  return grade;
}

std::optional<int> GradedPoly::max_grade() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int g = grade_of(e);
    if (!best || g > *best) best = g;
  }
  return best;
}

std::optional<int> GradedPoly::min_grade() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int g = grade_of(e);
    if (!best || g < *best) best = g;
  }
  return best;
}

void GradedPoly::add_term(const Exponents& exponents, const LambdaPoly& coefficient) {
  if (exponents.size() != variables_->size()) throw UsageError("exponent vector does not match variable set");
  if (coefficient.cutoff() != cutoff_) {
    throw ConfigurationError("generator cutoff mismatch: " + std::to_string(cutoff_) + " vs " +
                             std::to_string(coefficient.cutoff()));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::truncated(int max_grade) const {
  GradedPoly result(variables_, cutoff_);
  for (const auto& [e, c] : terms_) {
    if (grade_of(e) <= max_grade) result.terms_.emplace_hint(result.terms_.end(), e, c);
  }
  return result;
}

GradedPoly GradedPoly::homogeneous_part(int grade) const {
  GradedPoly result(variables_, cutoff_);
  for (const auto& [e, c] : terms_) {
    if (grade_of(e) == grade) result.terms_.emplace_hint(result.terms_.end(), e, c);
  }
  return result;
}

GradedPoly GradedPoly::augmented() const {
  GradedPoly result(variables_, cutoff_);
  for (const auto& [e, c] : terms_) {
    result.add_term(e, LambdaPoly::constant(augment_coeffs(c), cutoff_));
  }
  return result;
}

GradedPoly GradedPoly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != variables_->size()) throw UsageError("permutation size does not match variable set");
  GradedPoly result(variables_, cutoff_);
  Exponents out(perm.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = e[perm[i]];
    result.add_term(out, c);
  }
  return result;
}

GradedPoly GradedPoly::relabeled(VariablesPtr variables) const {
  if (variables->size() != variables_->size()) throw UsageError("relabeling must keep the number of variables");
  GradedPoly result(std::move(variables), cutoff_);
  result.terms_ = terms_;
  return result;
}

bool GradedPoly::same_space(const GradedPoly& other) const {
  return cutoff_ == other.cutoff_ && (variables_ == other.variables_ || *variables_ == *other.variables_);
}

void GradedPoly::require_same_space(const GradedPoly& other) const {
  if (cutoff_ != other.cutoff_) {
    throw ConfigurationError("generator cutoff mismatch: " + std::to_string(cutoff_) + " vs " +
                             std::to_string(other.cutoff_));
  }
  if (!same_space(other)) throw UsageError("polynomials live over different variable sets");
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly result(*this);
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
  require_same_space(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
  require_same_space(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const LambdaPoly& scalar) {
  if (scalar.cutoff() != cutoff_) throw ConfigurationError("generator cutoff mismatch");
  TermMap scaled;
  for (auto& [e, c] : terms_) {
    LambdaPoly product = c * scalar;
    if (!product.is_zero()) scaled.emplace_hint(scaled.end(), e, std::move(product));
  }
  terms_ = std::move(scaled);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs) { return multiply_truncated(lhs, rhs, std::nullopt); }

bool operator==(const GradedPoly& lhs, const GradedPoly& rhs) {
  return lhs.same_space(rhs) && lhs.terms_ == rhs.terms_;
}

GradedPoly multiply_truncated(const GradedPoly& lhs, const GradedPoly& rhs, std::optional<int> max_grade) {
  if (!lhs.same_space(rhs)) {
    if (lhs.cutoff() != rhs.cutoff()) throw ConfigurationError("generator cutoff mismatch");
    throw UsageError("polynomials live over different variable sets");
  }
  GradedPoly result(lhs.variables(), lhs.cutoff());
  if (lhs.is_zero() || rhs.is_zero()) return result;

  // Grades are precomputed so pairs above the bound are skipped cheaply.
  std::vector<std::pair<int, const GradedPoly::TermMap::value_type*>> right;
  right.reserve(rhs.size());
  for (const auto& term : rhs.terms()) right.emplace_back(rhs.grade_of(term.first), &term);
  std::sort(right.begin(), right.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Exponents e(lhs.variables()->size());
  for (const auto& [le, lc] : lhs.terms()) {
    const int lg = lhs.grade_of(le);
    for (const auto& [rg, rterm] : right) {
      if (max_grade && lg + rg > *max_grade) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = le[i] + rterm->first[i];
      result.add_term(e, lc * rterm->second);
    }
  }
  return result;
}

GradedPoly power_truncated(const GradedPoly& base, std::uint32_t exponent, std::optional<int> max_grade) {
  GradedPoly result = GradedPoly::constant(base.variables(), LambdaPoly::constant(1, base.cutoff()));
  if (max_grade) result = result.truncated(*max_grade);
  GradedPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply_truncated(result, square, max_grade);
    exponent >>= 1U;
    if (exponent > 0) square = multiply_truncated(square, square, max_grade);
  }
  return result;
}

GradedPoly substitute(const GradedPoly& outer, std::span<const GradedPoly> images, std::optional<int> max_grade) {
  const std::size_t arity = outer.variables()->size();
  if (images.size() != arity) throw UsageError("substitution needs one image per variable");
  if (images.empty()) throw UsageError("substitution into a polynomial without variables");
  const GradedPoly& first = images.front();
  for (const auto& image : images) {
    if (!image.same_space(first)) throw UsageError("substitution images live over different variable sets");
  }
  if (outer.cutoff() != first.cutoff()) throw ConfigurationError("generator cutoff mismatch");

  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<GradedPoly>> powers(arity);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const GradedPoly& {
    auto& table = powers[i];
    if (table.empty()) {
      GradedPoly one = GradedPoly::constant(first.variables(), LambdaPoly::constant(1, first.cutoff()));
      table.push_back(max_grade ? one.truncated(*max_grade) : one);
    }
    while (table.size() <= k) table.push_back(multiply_truncated(table.back(), images[i], max_grade));
    return table[k];
  };

  GradedPoly result(first.variables(), first.cutoff());
  for (const auto& [e, c] : outer.terms()) {
    GradedPoly term = GradedPoly::constant(first.variables(), c);
    for (std::size_t i = 0; i < arity && !term.is_zero(); ++i) {
      if (e[i] > 0) term = multiply_truncated(term, power_of(i, e[i]), max_grade);
    }
    if (max_grade) term = term.truncated(*max_grade);
    result += term;
  }
  return result;
}

GradedPoly embed(const GradedPoly& poly, const VariablesPtr& target, std::size_t offset) {
  if (offset + poly.variables()->size() > target->size()) throw UsageError("embedding exceeds the target variables");
  GradedPoly result(target, poly.cutoff());
  Exponents e(target->size(), 0);
  for (const auto& [pe, c] : poly.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < pe.size(); ++i) e[offset + i] = pe[i];
    result.add_term(e, c);
  }
  return result;
}

}  // namespace cobord
