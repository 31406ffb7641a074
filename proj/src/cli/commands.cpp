#include "cobord/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cobord/char_class.hpp"
#include "cobord/cli/document.hpp"
#include "cobord/cli/expr.hpp"
#include "cobord/cli/render.hpp"
#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/proj_space.hpp"
#include "cobord/thom_lab.hpp"

namespace cobord::cli {

namespace {

enum class Format { Text, Json, Latex };

struct Global {
  std::string format = "text";
  std::string out_path;
  std::optional<std::size_t> cutoff;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "latex") return Format::Latex;
    return Format::Text;
  }
};

std::size_t cutoff_for(const Global& global, int order, std::optional<std::size_t> from_input = std::nullopt) {
  if (global.cutoff) return *global.cutoff;
  if (from_input) return *from_input;
  return std::max<std::size_t>(kDefaultCutoff, static_cast<std::size_t>(std::max(order, 1)));
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

std::string emit(const PolyDocument& doc, Format format) {
  switch (format) {
    case Format::Json: return dump(to_json(doc));
    case Format::Latex: return render_latex(doc.terms) + "\n";
    case Format::Text: break;
  }
  return render_text(doc.terms) + "\n";
}

std::string inline_poly(const PolyDocument& doc, Format format) {
  return format == Format::Latex ? render_latex(doc.terms) : render_text(doc.terms);
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Inputs: either a PolyDocument (JSON) or an expression.

struct Source {
  std::string path;
  std::optional<PolyDocument> doc;
  ExprPtr expr;
};

Source load_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  Source source{path, std::nullopt, nullptr};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    source.doc = document_from_text(text);
  } else {
    source.expr = parse_expr(text);
  }
  return source;
}

std::pair<int, int> ranks_of(const Source& source) {
  if (source.doc) return {source.doc->m, source.doc->n};
  int m = 0;
  int n = 0;
  for (const auto& name : collect_symbols(*source.expr)) {
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) continue;
    if (name.find_first_not_of("0123456789", 1) != std::string::npos || name.size() > 6) continue;
    const int index = std::stoi(name.substr(1));
    (name[0] == 'a' ? m : n) = std::max(name[0] == 'a' ? m : n, index);
  }
  return {m, n};
}

std::optional<std::size_t> cutoff_of(const std::vector<const Source*>& sources) {
  for (const auto* source : sources) {
    if (source->doc) return source->doc->cutoff;
  }
  return std::nullopt;
}

CharClassPoly to_char_class(const Source& source, int m, int n, SymbolMode mode, std::size_t cutoff) {
  if (source.doc) {
    CharClassPoly poly = char_class_from(*source.doc);
    if (poly.m() != m || poly.n() != n) {
      throw UsageError("'" + source.path + "' has ranks (" + std::to_string(poly.m()) + ", " + std::to_string(poly.n()) +
                       "), expected (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }
    if (poly.cutoff() != cutoff) {
      throw ConfigurationError("'" + source.path + "' has cutoff " + std::to_string(poly.cutoff()) + ", expected " +
                               std::to_string(cutoff));
    }
    return poly;
  }
  return CharClassPoly(m, n, evaluate_expr(*source.expr, CharClassPoly::variables_for(m, n), cutoff), mode);
}

// Ranks shared by several inputs: explicit --rank, else the largest used.
std::pair<int, int> common_ranks(const std::vector<const Source*>& sources, int rank, bool equal) {
  if (rank > 0) return {rank, rank};
  int m = 0;
  int n = 0;
  for (const auto* source : sources) {
    auto [sm, sn] = ranks_of(*source);
    m = std::max(m, sm);
    n = std::max(n, sn);
  }
  if (equal) {
    m = n = std::max({m, n, 1});
  }
  return {m, n};
}

// ---------------------------------------------------------------------------
// Report rendering

std::string emit_lemma(const std::vector<LemmaReport>& reports, bool as_list, Format format) {
  auto docs = [](const LemmaReport& r) {
    return std::array<PolyDocument, 5>{make_document(r.class_resolution), make_document(r.class_naive),
                                       make_document(r.difference), make_document(epsilon_space(r.class_resolution)),
                                       make_document(epsilon_space(r.class_naive))};
  };
  if (format == Format::Json) {
    Json list = Json::array();
    for (const auto& r : reports) {
      const auto d = docs(r);
      Json json;
      json["schema_version"] = kSchemaVersion;
      json["d"] = r.d;
      json["class_resolution"] = to_json(d[0]);
      json["class_naive"] = to_json(d[1]);
      json["difference"] = to_json(d[2]);
      json["epsilon_resolution"] = to_json(d[3]);
      json["epsilon_naive"] = to_json(d[4]);
      json["verdict"] = r.verdict;
      list.push_back(std::move(json));
    }
    if (!as_list) return dump(list.front());
    Json wrapper;
    wrapper["schema_version"] = kSchemaVersion;
    wrapper["reports"] = std::move(list);
    return dump(wrapper);
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto d = docs(r);
    if (i > 0) out += "\n";
    if (format == Format::Latex) {
      const std::string k = std::to_string(3 * r.d - 3);
      out += "% d = " + std::to_string(r.d) + "\n";
      out += "c_{1}^{U}(\\nu^{\\otimes " + k + "}) = " + inline_poly(d[0], format) + "\n";
      out += k + " c_{1}^{U}(\\nu) = " + inline_poly(d[1], format) + "\n";
      out += "\\Delta = " + inline_poly(d[2], format) + "\n";
      out += "\\varepsilon(c_{1}^{U}(\\nu^{\\otimes " + k + "})) = " + inline_poly(d[3], format) + "\n";
      out += "\\varepsilon(" + k + " c_{1}^{U}(\\nu)) = " + inline_poly(d[4], format) + "\n";
      out += "% verdict: " + bool_text(r.verdict) + "\n";
    } else {
      out += "d = " + std::to_string(r.d) + "\n";
      out += "class_resolution: " + inline_poly(d[0], format) + "\n";
      out += "class_naive: " + inline_poly(d[1], format) + "\n";
      out += "difference: " + inline_poly(d[2], format) + "\n";
      out += "epsilon_resolution: " + inline_poly(d[3], format) + "\n";
      out += "epsilon_naive: " + inline_poly(d[4], format) + "\n";
      out += "verdict: " + bool_text(r.verdict) + "\n";
    }
  }
  return out;
}

Json division_json(const DivisibilityReport& report) {
  Json json;
  json["divisible"] = report.divisible();
  json["integral"] = report.divisible() ? Json(report.integral_flag) : Json(nullptr);
  json["quotient"] = report.quotient ? to_json(make_document(*report.quotient)) : Json(nullptr);
  json["remainder"] = to_json(make_document(report.remainder));
  return json;
}

std::string division_lines(const DivisibilityReport& report, Format format) {
  std::string out;
  const std::string q = report.quotient ? inline_poly(make_document(*report.quotient), format) : "none";
  const std::string r = inline_poly(make_document(report.remainder), format);
  const std::string integral = report.divisible() ? bool_text(report.integral_flag) : "n/a";
  if (format == Format::Latex) {
    out += "% divisible: " + bool_text(report.divisible()) + "\n";
    out += "% integral: " + integral + "\n";
    if (report.quotient) out += "Q = " + q + "\n";
    out += "R = " + r + "\n";
  } else {
    out += "divisible: " + bool_text(report.divisible()) + "\n";
    out += "integral: " + integral + "\n";
    out += "quotient: " + q + "\n";
    out += "remainder: " + r + "\n";
  }
  return out;
}

std::string emit_division(const DivisibilityReport& report, Format format) {
  if (format == Format::Json) {
    Json json;
    json["schema_version"] = kSchemaVersion;
    const Json division = division_json(report);
    for (const auto& [key, value] : division.items()) json[key] = value;
    return dump(json);
  }
  return division_lines(report, format);
}

// ---------------------------------------------------------------------------

int order_or_default(int order) { return order > 0 ? order : default_order(); }

void write_output(const Global& global, const std::string& payload, std::ostream& out) {
  if (global.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(global.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + global.out_path + "'");
  file << payload;
}

}  // namespace

int default_order() {
  if (const char* env = std::getenv("COBORD_DEFAULT_ORDER"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("COBORD_DEFAULT_ORDER must be a positive integer, got '") + env + "'");
  }
  return kDefaultOrder;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact complex-cobordism characteristic-class calculator", "cobord"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--out", global.out_path, "Write the result to FILE instead of stdout");
  app.add_option("--cutoff", global.cutoff, "Generator cutoff K (p1..pK)")->check(CLI::Range(1, 1000000));

  std::function<std::string()> action;
  int order = 0;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Truncation order (default 8 or $COBORD_DEFAULT_ORDER)")
        ->check(CLI::Range(1, 1000000));
  };
  auto context = [&](std::optional<std::size_t> from_input = std::nullopt) {
    const int n = order_or_default(order);
    return FglContext::build(n, cutoff_for(global, n, from_input));
  };

  // Formal group law series.
  auto* fgl = app.add_subcommand("fgl", "Print the formal group law F(x, y)");
  add_order(fgl);
  fgl->callback([&] { action = [&] { return emit(make_document(context().sum()), global.fmt()); }; });

  for (const char* name : {"log", "exp", "inv"}) {
    auto* sub = app.add_subcommand(name, std::string("Print the ") + name + " series of the formal group law");
    add_order(sub);
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        const FglContext ctx = context();
        const TruncSeries& s = which == "log" ? ctx.log() : (which == "exp" ? ctx.exp() : ctx.inverse());
        return emit(make_document(s), global.fmt());
      };
    });
  }

  long k_value = 0;
  auto* kseries = app.add_subcommand("kseries", "Print the k-series [k]_F(x)");
  kseries->add_option("--k", k_value, "Integer k")->required();
  add_order(kseries);
  kseries->callback([&] { action = [&] { return emit(make_document(k_series(context(), k_value)), global.fmt()); }; });

  long lemma_d = 0;
  long lemma_max_d = 0;
  auto* lemma = app.add_subcommand("lemma", "Compare c1^U(nu^(3d-3)) with (3d-3) c1^U(nu) on CP^2");
  lemma->add_option("--d", lemma_d, "Map parameter d (f*nu = nu^d)")->required()->check(CLI::Range(1, 1000000));
  lemma->add_option("--max-d", lemma_max_d, "Report every d up to this value")->check(CLI::Range(1, 1000000));
  add_order(lemma);
  lemma->callback([&] {
    action = [&] {
      if (lemma_max_d != 0 && lemma_max_d < lemma_d) throw UsageError("--max-d must be at least --d");
      const FglContext ctx = context();
      const long last = lemma_max_d == 0 ? lemma_d : lemma_max_d;
      std::vector<std::future<LemmaReport>> pending;
      for (long d = lemma_d; d <= last; ++d) {
        pending.push_back(std::async(std::launch::async, [&ctx, d] { return lemma_check(ctx, d); }));
      }
      std::vector<LemmaReport> reports;
      for (auto& f : pending) reports.push_back(f.get());
      return emit_lemma(reports, lemma_max_d != 0, global.fmt());
    };
  });

  int rank = 0;
  auto* detc1 = app.add_subcommand("det-c1", "c1^U of the determinant bundle in terms of e_i = c_i^U");
  detc1->add_option("--rank", rank, "Bundle rank")->check(CLI::Range(1, 1000000));
  add_order(detc1);
  detc1->callback([&] {
    action = [&] {
      const FglContext ctx = context();
      return emit(make_elementary_document(det_c1(ctx, std::max(rank, 1)), ctx.order()), global.fmt());
    };
  });

  int qm = 0;
  int qn = 0;
  auto* quotient = app.add_subcommand("quotient-chern", "Chern classes of B - A from c(B) / c(A)");
  quotient->add_option("--m", qm, "Rank of A (classes a_i)")->required()->check(CLI::Range(0, 1000000));
  quotient->add_option("--n", qn, "Rank of B (classes b_j)")->required()->check(CLI::Range(0, 1000000));
  add_order(quotient);
  quotient->callback([&] {
    action = [&] {
      const int grade = order_or_default(order);
      const auto classes = quotient_chern(qm, qn, grade, cutoff_for(global, grade));
      if (global.fmt() == Format::Json) {
        Json json;
        json["schema_version"] = kSchemaVersion;
        Json list = Json::array();
        for (const auto& c : classes) list.push_back(to_json(make_document(c)));
        json["classes"] = std::move(list);
        return dump(json);
      }
      std::string text;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string label = global.fmt() == Format::Latex ? "c_{" + std::to_string(i + 1) + "}"
                                                                 : "c" + std::to_string(i + 1);
        text += label + " = " + inline_poly(make_document(classes[i]), global.fmt()) + "\n";
      }
      return text;
    };
  });

  std::string input_path;
  auto* cherndold = app.add_subcommand("chern-dold", "Chern-Dold character of a polynomial in c_i^U");
  cherndold->add_option("--input", input_path, "Polynomial file (JSON document or expression)")->required();
  cherndold->add_option("--rank", rank, "Use ranks (R, R) for expression input")->check(CLI::Range(1, 1000000));
  add_order(cherndold);
  cherndold->callback([&] {
    action = [&] {
      const Source source = load_source(input_path);
      const auto [m, n] = common_ranks({&source}, rank, false);
      const FglContext ctx = context(cutoff_of({&source}));
      const CharClassPoly poly = to_char_class(source, m, n, SymbolMode::Cobordism, ctx.cutoff());
      return emit(make_document(chern_dold_poly(ctx, poly)), global.fmt());
    };
  });

  std::string singularity = "sigma1";
  std::string variant = "trivial";
  auto* realize = app.add_subcommand("realize", "Build a cobordism realization of a Thom polynomial");
  realize->add_option("--singularity", singularity, "sigma1, sigma2, ...");
  realize->add_option("--variant", variant, "trivial or p1")->check(CLI::IsMember({"trivial", "p1"}));
  realize->add_option("--rank", rank, "Rank m = n")->check(CLI::Range(1, 1000000));
  add_order(realize);
  realize->callback([&] {
    action = [&] {
      const SingularityId s = SingularityId::parse(singularity);
      const int r = std::max(rank, 1);
      if (variant == "trivial") {
        const int n = order_or_default(order);
        return emit(make_document(realization_trivial(s, r, r, cutoff_for(global, n)).poly()), global.fmt());
      }
      if (s != SingularityId::sigma1()) throw UsageError("the p1 variant exists for sigma1 only");
      const FglContext ctx = context();
      return emit(make_document(realization_p1(ctx, r, ctx.order()).poly()), global.fmt());
    };
  });

  auto* check = app.add_subcommand("check-realization", "Check that a polynomial augments to a Thom polynomial");
  check->add_option("--input", input_path, "Candidate polynomial file")->required();
  check->add_option("--singularity", singularity, "sigma1, sigma2, ...");
  check->add_option("--rank", rank, "Use ranks (R, R) for expression input")->check(CLI::Range(1, 1000000));
  check->callback([&] {
    action = [&] {
      const SingularityId s = SingularityId::parse(singularity);
      const Source source = load_source(input_path);
      const auto [m, n] = common_ranks({&source}, rank, true);
      const CharClassPoly poly =
          to_char_class(source, m, n, SymbolMode::Cobordism, cutoff_for(global, kDefaultOrder, cutoff_of({&source})));
      const bool valid = check_realization(poly, s);
      const PolyDocument augmented = make_document(poly.augmented());
      switch (global.fmt()) {
        case Format::Json: {
          Json json;
          json["schema_version"] = kSchemaVersion;
          json["singularity"] = s.name();
          json["valid"] = valid;
          json["augmented"] = to_json(augmented);
          return dump(json);
        }
        case Format::Latex:
          return "\\varepsilon(P) = " + render_latex(augmented.terms) + "\n% valid: " + bool_text(valid) + "\n";
        case Format::Text: break;
      }
      return "singularity: " + s.name() + "\naugmented: " + render_text(augmented.terms) + "\nvalid: " +
             bool_text(valid) + "\n";
    };
  });

  std::string numerator_path;
  std::string divisor_path;
  std::string mode_name = "cohomology";
  int div_m = -1;
  int div_n = -1;
  auto* divides = app.add_subcommand("divides", "Exact divisibility test in Lambda_Q[a, b]");
  divides->add_option("--numerator", numerator_path, "Numerator file")->required();
  divides->add_option("--divisor", divisor_path, "Divisor file")->required();
  divides->add_option("--mode", mode_name, "Symbol mode for expression input")
      ->check(CLI::IsMember({"cobordism", "cohomology"}));
  divides->add_option("--m", div_m, "Rank m for expression input")->check(CLI::Range(0, 1000000));
  divides->add_option("--n", div_n, "Rank n for expression input")->check(CLI::Range(0, 1000000));
  divides->callback([&] {
    action = [&] {
      const Source num = load_source(numerator_path);
      const Source den = load_source(divisor_path);
      auto [m, n] = common_ranks({&num, &den}, 0, false);
      if (div_m >= 0) m = div_m;
      if (div_n >= 0) n = div_n;
      const std::size_t cutoff = cutoff_for(global, kDefaultOrder, cutoff_of({&num, &den}));
      const SymbolMode mode = symbol_mode_from_string(mode_name);
      const CharClassPoly numerator = to_char_class(num, m, n, mode, cutoff);
      const CharClassPoly divisor = to_char_class(den, m, n, mode, cutoff);
      return emit_division(divisibility_check(numerator, divisor), global.fmt());
    };
  });

  std::string lambda_text;
  std::string p_path;
  std::string q_path;
  bool rational_lambda = false;
  auto* combine = app.add_subcommand("combine", "Affine combination lambda P + (1 - lambda) Q of realizations");
  combine->add_option("--lambda", lambda_text, "Integer lambda")->required();
  combine->add_option("--p", p_path, "Realization P")->required();
  combine->add_option("--q", q_path, "Realization Q")->required();
  combine->add_option("--singularity", singularity, "Target singularity");
  combine->add_option("--rank", rank, "Use ranks (R, R) for expression input")->check(CLI::Range(1, 1000000));
  combine->add_flag("--rational-lambda", rational_lambda, "Allow non-integer lambda (extension)");
  combine->callback([&] {
    action = [&] {
      Rational lambda;
      try {
        lambda = Rational::parse(lambda_text);
      } catch (const DomainError&) {
        throw UsageError("--lambda expects an integer or n/d, got '" + lambda_text + "'");
      }
      const SingularityId s = SingularityId::parse(singularity);
      const Source p = load_source(p_path);
      const Source q = load_source(q_path);
      const auto [m, n] = common_ranks({&p, &q}, rank, true);
      const std::size_t cutoff = cutoff_for(global, kDefaultOrder, cutoff_of({&p, &q}));
      const Realization rp(to_char_class(p, m, n, SymbolMode::Cobordism, cutoff), s, p_path);
      const Realization rq(to_char_class(q, m, n, SymbolMode::Cobordism, cutoff), s, q_path);
      return emit(make_document(combine_affine(rp, rq, lambda, rational_lambda).poly()), global.fmt());
    };
  });

  std::string locus;
  auto* theorem = app.add_subcommand("theorem", "Test whether ch_U(P - Q) is divisible by a Thom polynomial");
  theorem->add_option("--p", p_path, "Realization P")->required();
  theorem->add_option("--q", q_path, "Realization Q")->required();
  theorem->add_option("--singularity", singularity, "Target singularity of P and Q");
  theorem->add_option("--locus", locus, "Singularity whose Thom polynomial divides (default sigma<r+1>)");
  theorem->add_option("--divisor", divisor_path, "Explicit divisor file (cohomology symbols)");
  theorem->add_option("--rank", rank, "Use ranks (R, R) for expression input")->check(CLI::Range(1, 1000000));
  add_order(theorem);
  theorem->callback([&] {
    action = [&] {
      const SingularityId s = SingularityId::parse(singularity);
      const Source p = load_source(p_path);
      const Source q = load_source(q_path);
      const auto [m, n] = common_ranks({&p, &q}, rank, true);
      const FglContext ctx = context(cutoff_of({&p, &q}));
      const Realization rp(to_char_class(p, m, n, SymbolMode::Cobordism, ctx.cutoff()), s, p_path);
      const Realization rq(to_char_class(q, m, n, SymbolMode::Cobordism, ctx.cutoff()), s, q_path);
      const SingularityId singular_locus = locus.empty() ? SingularityId::sigma(s.r() + 1) : SingularityId::parse(locus);
      const TheoremReport report =
          divisor_path.empty()
              ? theorem_harness(rp, rq, s, singular_locus, ctx)
              : theorem_harness(rp, rq, s, to_char_class(load_source(divisor_path), m, n, SymbolMode::Cohomology, ctx.cutoff()),
                                ctx);
      const Format format = global.fmt();
      if (format == Format::Json) {
        Json json;
        json["schema_version"] = kSchemaVersion;
        json["difference"] = to_json(make_document(report.difference));
        json["character"] = to_json(make_document(report.character));
        json["divisor"] = to_json(make_document(report.division.divisor));
        const Json division = division_json(report.division);
        for (const auto& [key, value] : division.items()) json[key] = value;
        Json grades = Json::array();
        for (const auto& g : report.per_grade) grades.push_back(Json{{"grade", g.grade}, {"divisible", g.divisible}});
        json["per_grade"] = std::move(grades);
        return dump(json);
      }
      const std::string prefix = format == Format::Latex ? "% " : "";
      std::string text;
      text += (format == Format::Latex ? "P - Q = " : "difference: ") + inline_poly(make_document(report.difference), format) + "\n";
      text += (format == Format::Latex ? "\\mathrm{ch}_{U}(P - Q) = " : "character: ") +
              inline_poly(make_document(report.character), format) + "\n";
      text += (format == Format::Latex ? "T = " : "divisor: ") + inline_poly(make_document(report.division.divisor), format) + "\n";
      text += division_lines(report.division, format);
      for (const auto& g : report.per_grade) {
        text += prefix + "grade " + std::to_string(g.grade) + ": " + (g.divisible ? "divisible" : "not divisible") + "\n";
      }
      return text;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    write_output(global, action(), out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace cobord::cli
