#include "cobord/cli/render.hpp"

#include <algorithm>
#include <cctype>

namespace cobord::cli {

namespace {

// Compare from the last position to the first, smaller exponent first.
bool reverse_positions_less(const Exponents& lhs, const Exponents& rhs) {
  for (std::size_t i = lhs.size(); i-- > 0;) {
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
  }
  return false;
}

std::string text_factor(const std::string& name, std::uint32_t power) {
  return power == 1 ? name : name + "^" + std::to_string(power);
}

std::string latex_factor(const std::string& name, std::uint32_t power) {
  const std::string symbol = latex_symbol(name);
  return power == 1 ? symbol : symbol + "^{" + std::to_string(power) + "}";
}

std::string latex_magnitude(const Rational& magnitude) {
  if (magnitude.is_integer()) return magnitude.to_string();
  return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

}  // namespace

std::string latex_symbol(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::vector<Term> canonical_terms(const GradedPoly& poly) {
  std::vector<const GradedPoly::TermMap::value_type*> outer;
  outer.reserve(poly.size());
  for (const auto& term : poly.terms()) outer.push_back(&term);
  std::sort(outer.begin(), outer.end(), [&](const auto* lhs, const auto* rhs) {
    const int lg = poly.grade_of(lhs->first);
    const int rg = poly.grade_of(rhs->first);
    if (lg != rg) return lg < rg;
    return reverse_positions_less(lhs->first, rhs->first);
  });

  const auto& names = poly.variables()->names;
  std::vector<Term> terms;
  for (const auto* entry : outer) {
    std::vector<const LambdaPoly::TermMap::value_type*> inner;
    for (const auto& term : entry->second.terms()) inner.push_back(&term);
    std::sort(inner.begin(), inner.end(), [](const auto* lhs, const auto* rhs) {
      const int lg = LambdaPoly::grade_of(lhs->first);
      const int rg = LambdaPoly::grade_of(rhs->first);
      if (lg != rg) return lg > rg;  // grades are non-positive
      return reverse_positions_less(lhs->first, rhs->first);
    });
    for (const auto* lambda_term : inner) {
      Term term{lambda_term->second, {}};
      for (std::size_t i = 0; i < lambda_term->first.size(); ++i) {
        if (lambda_term->first[i] > 0) term.powers.emplace_back("p" + std::to_string(i + 1), lambda_term->first[i]);
      }
      for (std::size_t i = 0; i < entry->first.size(); ++i) {
        if (entry->first[i] > 0) term.powers.emplace_back(names[i], entry->first[i]);
      }
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

std::string render_text(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& term = terms[k];
    const bool negative = term.coeff.sign() < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -term.coeff : term.coeff;
    std::vector<std::string> factors;
    if (!magnitude.is_one() || term.powers.empty()) factors.push_back(magnitude.to_string());
    for (const auto& [name, power] : term.powers) factors.push_back(text_factor(name, power));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

std::string render_latex(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& term = terms[k];
    const bool negative = term.coeff.sign() < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -term.coeff : term.coeff;
    std::vector<std::string> factors;
    if (!magnitude.is_one() || term.powers.empty()) factors.push_back(latex_magnitude(magnitude));
    for (const auto& [name, power] : term.powers) factors.push_back(latex_factor(name, power));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += " ";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace cobord::cli
