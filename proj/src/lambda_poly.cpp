#include "cobord/lambda_poly.hpp"

#include "cobord/errors.hpp"

namespace cobord {

LambdaPoly::LambdaPoly(std::size_t cutoff) : cutoff_(cutoff) {
  if (cutoff == 0) throw ConfigurationError("generator cutoff must be positive");
}

LambdaPoly LambdaPoly::constant(const Rational& value, std::size_t cutoff) {
  LambdaPoly result(cutoff);
  result.add_term(Exponents(cutoff, 0), value);
  return result;
}

LambdaPoly LambdaPoly::generator(std::size_t index, std::size_t cutoff) {
  if (index > cutoff) {
    throw ConfigurationError("generator p" + std::to_string(index) + " exceeds cutoff " + std::to_string(cutoff));
  }
  if (index == 0) return constant(1, cutoff);
  LambdaPoly result(cutoff);
  Exponents e(cutoff, 0);
  e[index - 1] = 1;
  result.add_term(e, 1);
  return result;
}

bool LambdaPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first) {
    if (e != 0) return false;
  }
  return true;
}

Rational LambdaPoly::constant_term() const {
  auto it = terms_.find(Exponents(cutoff_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LambdaPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

int LambdaPoly::grade_of(const Exponents& exponents) {
  int grade = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) grade -= static_cast<int>((i + 1) * exponents[i]);
  return grade;
}

std::optional<int> LambdaPoly::homogeneous_grade() const {
  if (terms_.empty()) return 0;
  const int g = grade_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (grade_of(e) != g) return std::nullopt;
  }
  return g;
}

void LambdaPoly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != cutoff_) throw ConfigurationError("exponent vector does not match generator cutoff");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly result(*this);
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs) {
  require_same_cutoff(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs) {
  require_same_cutoff(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LambdaPoly operator*(const LambdaPoly& lhs, const LambdaPoly& rhs) {
  lhs.require_same_cutoff(rhs);
  if (lhs.is_constant()) return rhs * lhs.constant_term();
  if (rhs.is_constant()) return lhs * rhs.constant_term();
  LambdaPoly result(lhs.cutoff_);
  Exponents e(lhs.cutoff_);
  for (const auto& [le, lc] : lhs.terms_) {
    for (const auto& [re, rc] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = le[i] + re[i];
      result.add_term(e, lc * rc);
    }
  }
  return result;
}

bool operator==(const LambdaPoly& lhs, const LambdaPoly& rhs) {
  return lhs.cutoff_ == rhs.cutoff_ && lhs.terms_ == rhs.terms_;
}

void LambdaPoly::require_same_cutoff(const LambdaPoly& other) const {
  if (cutoff_ != other.cutoff_) {
    throw ConfigurationError("generator cutoff mismatch: " + std::to_string(cutoff_) + " vs " +
                             std::to_string(other.cutoff_));
  }
}

Rational augment_coeffs(const LambdaPoly& value) { return value.constant_term(); }

}  // namespace cobord
