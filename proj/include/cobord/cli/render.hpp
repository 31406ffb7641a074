#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/rational.hpp"

namespace cobord::cli {

/// One flattened term: rational coefficient times a product of symbol powers,
/// Lambda generators first (p1, p2, ...), then the polynomial variables.
struct Term {
  Rational coeff;
  std::vector<std::pair<std::string, std::uint32_t>> powers;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms of `poly` in canonical order.
///
/// Monomials in the polynomial variables ascend by weighted grade; ties are
/// broken by comparing exponents from the last variable towards the first,
/// smaller exponent first (graded lex with p1 < p2 < ... < a1 < ... < b1 < ... < x).
/// Within one such monomial the Lambda part is ordered the same way, by
/// |grade| and then from p_K down to p_1.
std::vector<Term> canonical_terms(const GradedPoly& poly);

/// Plain text in the expression grammar accepted by parse_expr, e.g.
/// "x + y - p1*x*y". The zero polynomial renders as "0".
std::string render_text(const std::vector<Term>& terms);
/// LaTeX math fragment, e.g. "x + y - p_{1} x y".
std::string render_latex(const std::vector<Term>& terms);

inline std::string to_text(const GradedPoly& poly) { return render_text(canonical_terms(poly)); }
inline std::string to_latex(const GradedPoly& poly) { return render_latex(canonical_terms(poly)); }

/// "p1" -> "p_{1}", "x" -> "x".
std::string latex_symbol(const std::string& name);

}  // namespace cobord::cli
