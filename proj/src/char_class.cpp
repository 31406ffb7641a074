#include "cobord/char_class.hpp"

#include <algorithm>
#include <map>

#include "cobord/errors.hpp"

namespace cobord {

const char* to_string(SymbolMode mode) { return mode == SymbolMode::Cobordism ? "cobordism" : "cohomology"; }

SymbolMode symbol_mode_from_string(const std::string& text) {
  if (text == "cobordism") return SymbolMode::Cobordism;
  if (text == "cohomology") return SymbolMode::Cohomology;
  throw UsageError("unknown symbol mode '" + text + "'");
}

// ---------------------------------------------------------------------------
// CharClassPoly

VariablesPtr CharClassPoly::variables_for(int m, int n) {
  if (m < 0 || n < 0) throw UsageError("ranks must be non-negative");
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (int i = 1; i <= m; ++i) {
    names.push_back("a" + std::to_string(i));
    weights.push_back(static_cast<std::uint32_t>(i));
  }
  for (int j = 1; j <= n; ++j) {
    names.push_back("b" + std::to_string(j));
    weights.push_back(static_cast<std::uint32_t>(j));
  }
  return make_variables(std::move(names), std::move(weights));
}

CharClassPoly::CharClassPoly(int m, int n, std::size_t cutoff, SymbolMode mode)
    : m_(m), n_(n), mode_(mode), body_(variables_for(m, n), cutoff) {}

CharClassPoly::CharClassPoly(int m, int n, GradedPoly body, SymbolMode mode)
    : m_(m), n_(n), mode_(mode), body_(std::move(body)) {
  if (*body_.variables() != *variables_for(m, n)) {
    throw UsageError("polynomial variables are not a1..a" + std::to_string(m) + ", b1..b" + std::to_string(n));
  }
}

CharClassPoly CharClassPoly::constant(int m, int n, const LambdaPoly& value, SymbolMode mode) {
  return CharClassPoly(m, n, GradedPoly::constant(variables_for(m, n), value), mode);
}

CharClassPoly CharClassPoly::a(int i, int m, int n, std::size_t cutoff, SymbolMode mode) {
  if (i < 1 || i > m) throw UsageError("a" + std::to_string(i) + " exceeds rank m = " + std::to_string(m));
  return CharClassPoly(m, n, GradedPoly::variable(variables_for(m, n), static_cast<std::size_t>(i - 1), cutoff), mode);
}

CharClassPoly CharClassPoly::b(int j, int m, int n, std::size_t cutoff, SymbolMode mode) {
  if (j < 1 || j > n) throw UsageError("b" + std::to_string(j) + " exceeds rank n = " + std::to_string(n));
  return CharClassPoly(m, n, GradedPoly::variable(variables_for(m, n), static_cast<std::size_t>(m + j - 1), cutoff),
                       mode);
}

CharClassPoly CharClassPoly::truncated(int max_grade) const {
  return CharClassPoly(m_, n_, body_.truncated(max_grade), mode_);
}

CharClassPoly CharClassPoly::homogeneous_part(int grade) const {
  return CharClassPoly(m_, n_, body_.homogeneous_part(grade), mode_);
}

CharClassPoly CharClassPoly::augmented() const { return CharClassPoly(m_, n_, body_.augmented(), mode_); }

CharClassPoly CharClassPoly::with_mode(SymbolMode mode) const { return CharClassPoly(m_, n_, body_, mode); }

bool CharClassPoly::has_constant_coefficients() const {
  return std::all_of(body_.terms().begin(), body_.terms().end(),
                     [](const auto& term) { return term.second.is_constant(); });
}

void CharClassPoly::require_compatible(const CharClassPoly& other) const {
  if (m_ != other.m_ || n_ != other.n_) throw UsageError("characteristic-class polynomials have different ranks");
  if (mode_ != other.mode_) throw UsageError("cannot mix cobordism and cohomology symbols");
  if (cutoff() != other.cutoff()) throw ConfigurationError("generator cutoff mismatch");
}

CharClassPoly CharClassPoly::operator-() const { return CharClassPoly(m_, n_, -body_, mode_); }

CharClassPoly& CharClassPoly::operator+=(const CharClassPoly& rhs) {
  require_compatible(rhs);
  body_ += rhs.body_;
  return *this;
}

CharClassPoly& CharClassPoly::operator-=(const CharClassPoly& rhs) {
  require_compatible(rhs);
  body_ -= rhs.body_;
  return *this;
}

CharClassPoly& CharClassPoly::operator*=(const CharClassPoly& rhs) {
  require_compatible(rhs);
  body_ = body_ * rhs.body_;
  return *this;
}

CharClassPoly& CharClassPoly::operator*=(const LambdaPoly& scalar) {
  body_ *= scalar;
  return *this;
}

CharClassPoly& CharClassPoly::operator*=(const Rational& scalar) {
  body_ *= scalar;
  return *this;
}

bool operator==(const CharClassPoly& lhs, const CharClassPoly& rhs) {
  return lhs.m_ == rhs.m_ && lhs.n_ == rhs.n_ && lhs.mode_ == rhs.mode_ && lhs.body_ == rhs.body_;
}

// ---------------------------------------------------------------------------
// Symmetric functions

VariablesPtr elementary_variables(int rank, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (int i = 1; i <= rank; ++i) {
    names.push_back(prefix + std::to_string(i));
    weights.push_back(static_cast<std::uint32_t>(i));
  }
  return make_variables(std::move(names), std::move(weights));
}

namespace {

// Elementary symmetric polynomials E_0..E_count of variables
// [begin, begin + count), via prod_j (1 + x_j z).
std::vector<GradedPoly> elementary_in_block(const VariablesPtr& vars, std::size_t cutoff, std::size_t begin,
                                            std::size_t count) {
  std::vector<GradedPoly> e(count + 1, GradedPoly(vars, cutoff));
  e[0] = GradedPoly::constant(vars, LambdaPoly::constant(1, cutoff));
  for (std::size_t j = 0; j < count; ++j) {
    const GradedPoly root = GradedPoly::variable(vars, begin + j, cutoff);
    for (std::size_t i = j + 1; i >= 1; --i) e[i] += e[i - 1] * root;
  }
  return e;
}

}  // namespace

GradedPoly symmetric_reduce_block(const GradedPoly& poly, std::size_t begin, std::size_t count,
                                  const std::string& prefix) {
  const auto& in_vars = *poly.variables();
  if (begin + count > in_vars.size()) throw UsageError("symmetric block exceeds the variable set");
  for (std::size_t i = begin; i < begin + count; ++i) {
    if (in_vars.weights[i] != 1) throw UsageError("Chern roots must have weight one");
  }

  // Adjacent transpositions generate the symmetric group.
  std::vector<std::size_t> perm(in_vars.size());
  for (std::size_t k = 0; k + 1 < count; ++k) {
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm[begin + k], perm[begin + k + 1]);
    if (poly.permuted(perm) != poly) {
      throw DomainError("expression is not symmetric in " + in_vars.names[begin + k] + ", " +
                        in_vars.names[begin + k + 1]);
    }
  }

  std::vector<std::string> out_names(in_vars.names.begin(), in_vars.names.begin() + static_cast<long>(begin));
  std::vector<std::uint32_t> out_weights(in_vars.weights.begin(), in_vars.weights.begin() + static_cast<long>(begin));
  for (std::size_t k = 1; k <= count; ++k) {
    out_names.push_back(prefix + std::to_string(k));
    out_weights.push_back(static_cast<std::uint32_t>(k));
  }
  for (std::size_t i = begin + count; i < in_vars.size(); ++i) {
    out_names.push_back(in_vars.names[i]);
    out_weights.push_back(in_vars.weights[i]);
  }
  const VariablesPtr out_vars = make_variables(std::move(out_names), std::move(out_weights));

  const std::vector<GradedPoly> elementary = elementary_in_block(poly.variables(), poly.cutoff(), begin, count);
  std::vector<std::vector<GradedPoly>> powers(count + 1);
  auto elementary_power = [&](std::size_t k, std::uint32_t exponent) -> const GradedPoly& {
    auto& table = powers[k];
    if (table.empty()) table.push_back(GradedPoly::constant(poly.variables(), LambdaPoly::constant(1, poly.cutoff())));
    while (table.size() <= exponent) table.push_back(table.back() * elementary[k]);
    return table[exponent];
  };

  auto block_less = [&](const Exponents& lhs, const Exponents& rhs) {
    const auto lb = lhs.begin() + static_cast<long>(begin);
    const auto rb = rhs.begin() + static_cast<long>(begin);
    const auto le = lb + static_cast<long>(count);
    const auto re = rb + static_cast<long>(count);
    if (std::lexicographical_compare(lb, le, rb, re)) return true;
    if (std::lexicographical_compare(rb, re, lb, le)) return false;
    return lhs < rhs;
  };

  GradedPoly rest = poly;
  GradedPoly result(out_vars, poly.cutoff());
  Exponents out_e(out_vars->size());
  while (!rest.is_zero()) {
    auto lead = rest.terms().begin();
    for (auto it = std::next(lead); it != rest.terms().end(); ++it) {
      if (block_less(lead->first, it->first)) lead = it;
    }
    const Exponents alpha = lead->first;
    const LambdaPoly coeff = lead->second;

    // The lex-leading monomial of a symmetric polynomial has a
    // non-increasing block exponent alpha; it equals the leading monomial of
    // prod_k E_k^{alpha_k - alpha_{k+1}}.
    GradedPoly product = GradedPoly::constant(poly.variables(), coeff);
    Exponents passive(alpha.size(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i < begin || i >= begin + count) passive[i] = alpha[i];
    }
    GradedPoly passive_monomial(poly.variables(), poly.cutoff());
    passive_monomial.add_term(passive, LambdaPoly::constant(1, poly.cutoff()));
    product = product * passive_monomial;

    std::fill(out_e.begin(), out_e.end(), 0);
    for (std::size_t i = 0; i < begin; ++i) out_e[i] = alpha[i];
    for (std::size_t i = begin + count; i < alpha.size(); ++i) out_e[i] = alpha[i];
    for (std::size_t k = 0; k < count; ++k) {
      const std::uint32_t here = alpha[begin + k];
      const std::uint32_t next = k + 1 < count ? alpha[begin + k + 1] : 0;
      if (here < next) throw DomainError("expression is not symmetric in its Chern roots");
      const std::uint32_t d = here - next;
      out_e[begin + k] = d;
      if (d > 0) product = product * elementary_power(k + 1, d);
    }
    result.add_term(out_e, coeff);
    rest -= product;
  }
  return result;
}

GradedPoly symmetric_reduce(const TruncSeries& roots_expression) {
  return symmetric_reduce_block(roots_expression.poly(), 0, roots_expression.arity(), "e");
}

TruncSeries expand_elementary(const GradedPoly& elementary_poly, const std::vector<std::string>& roots, int order) {
  const std::size_t rank = elementary_poly.variables()->size();
  const VariablesPtr root_vars = make_unit_variables(roots);
  if (roots.size() < rank) throw UsageError("fewer roots than elementary symmetric functions");
  std::vector<GradedPoly> e = elementary_in_block(root_vars, elementary_poly.cutoff(), 0, roots.size());
  std::vector<GradedPoly> images(e.begin() + 1, e.begin() + 1 + static_cast<long>(rank));
  if (rank == 0) return TruncSeries(GradedPoly::constant(root_vars, elementary_poly.constant_term()), order);
  return TruncSeries(substitute(elementary_poly, images, order), order);
}

GradedPoly det_c1(const FglContext& ctx, int rank) {
  if (rank < 1) throw UsageError("det_c1 needs rank >= 1");
  std::vector<std::string> roots;
  for (int i = 1; i <= rank; ++i) roots.push_back("t" + std::to_string(i));
  return symmetric_reduce(nary_sum(ctx, roots));
}

std::vector<CharClassPoly> quotient_chern(int m, int n, int order, std::size_t cutoff, SymbolMode mode) {
  if (m < 0 || n < 0) throw UsageError("ranks must be non-negative");
  if (order < 0) throw ConfigurationError("order must be non-negative");
  const VariablesPtr vars = CharClassPoly::variables_for(m, n);
  const GradedPoly one = GradedPoly::constant(vars, LambdaPoly::constant(1, cutoff));
  GradedPoly a_sum(vars, cutoff);
  GradedPoly b_total = one;
  for (int i = 0; i < m; ++i) a_sum += GradedPoly::variable(vars, static_cast<std::size_t>(i), cutoff);
  for (int j = 0; j < n; ++j) b_total += GradedPoly::variable(vars, static_cast<std::size_t>(m + j), cutoff);

  // 1 / (1 + A) = sum_k (-A)^k; A has no grade-0 part.
  GradedPoly inverse = one;
  GradedPoly term = one;
  const GradedPoly minus_a = -a_sum;
  for (int k = 1; k <= order && !minus_a.is_zero(); ++k) {
    term = multiply_truncated(term, minus_a, order);
    if (term.is_zero()) break;
    inverse += term;
  }
  const GradedPoly total = multiply_truncated(b_total, inverse, order);

  std::vector<CharClassPoly> classes;
  classes.reserve(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) classes.emplace_back(m, n, total.homogeneous_part(i), mode);
  return classes;
}

TruncSeries chern_dold_line(const FglContext& ctx) { return ctx.exp().renamed({"t"}); }

namespace {

// Images of a_1..a_m, b_1..b_n under a_i -> e_i(g(s_1), ..., g(s_m)) and
// b_j -> e_j(g(u_1), ..., g(u_n)), rewritten in a's and b's.
std::vector<GradedPoly> generator_images(const TruncSeries& root_map, int m, int n, int order, std::size_t cutoff) {
  const VariablesPtr target = CharClassPoly::variables_for(m, n);
  std::vector<GradedPoly> images;
  auto side = [&](int rank, std::size_t offset) {
    if (rank == 0) return;
    std::vector<std::string> roots;
    for (int i = 1; i <= rank; ++i) roots.push_back("s" + std::to_string(i));
    std::vector<TruncSeries> mapped;
    for (int i = 0; i < rank; ++i) {
      mapped.push_back(series_compose(root_map, TruncSeries::variable(roots, static_cast<std::size_t>(i), order, cutoff)));
    }
    std::vector<TruncSeries> e(static_cast<std::size_t>(rank) + 1, TruncSeries(roots, order, cutoff));
    e[0] = TruncSeries::constant(roots, LambdaPoly::constant(1, cutoff), order);
    for (std::size_t j = 0; j < mapped.size(); ++j) {
      for (std::size_t i = j + 1; i >= 1; --i) e[i] += e[i - 1] * mapped[j];
    }
    for (int i = 1; i <= rank; ++i) {
      const GradedPoly reduced = symmetric_reduce(e[static_cast<std::size_t>(i)]);
      images.push_back(embed(reduced, target, offset));
    }
  };
  side(m, 0);
  side(n, static_cast<std::size_t>(m));
  return images;
}

CharClassPoly apply_root_map(const FglContext& ctx, const CharClassPoly& poly, const TruncSeries& root_map,
                             SymbolMode expected, SymbolMode produced) {
  if (poly.mode() != expected) {
    throw DomainError(std::string("expected ") + to_string(expected) + " symbols, got " + to_string(poly.mode()));
  }
  if (poly.cutoff() != ctx.cutoff()) throw ConfigurationError("generator cutoff mismatch with the context");
  const int order = ctx.order();
  if (const auto g = poly.max_grade(); g && *g > order) {
    throw TruncationError("polynomial has grade " + std::to_string(*g) + " above the working order " +
                          std::to_string(order));
  }
  if (poly.m() + poly.n() == 0) return poly.with_mode(produced);
  const auto images = generator_images(root_map, poly.m(), poly.n(), order, ctx.cutoff());
  return CharClassPoly(poly.m(), poly.n(), substitute(poly.poly(), images, order), produced);
}

}  // namespace

CharClassPoly chern_dold_poly(const FglContext& ctx, const CharClassPoly& poly) {
  return apply_root_map(ctx, poly, ctx.exp(), SymbolMode::Cobordism, SymbolMode::Cohomology);
}

CharClassPoly chern_dold_inverse(const FglContext& ctx, const CharClassPoly& poly) {
  return apply_root_map(ctx, poly, ctx.log(), SymbolMode::Cohomology, SymbolMode::Cobordism);
}

}  // namespace cobord
