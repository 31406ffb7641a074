#include "cobord/cli/document.hpp"

#include <algorithm>
#include <cctype>

#include "cobord/errors.hpp"

namespace cobord::cli {

namespace {

std::uint32_t trailing_index(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == name.size()) throw ParseError("variable '" + name + "' has no index");
  return static_cast<std::uint32_t>(std::stoul(name.substr(split)));
}

bool indexed_weights(const std::string& kind) { return kind == "char_class" || kind == "elementary"; }

PolyDocument base_document(const std::string& kind, const GradedPoly& poly) {
  PolyDocument doc;
  doc.kind = kind;
  doc.cutoff = poly.cutoff();
  doc.variables = poly.variables()->names;
  doc.terms = canonical_terms(poly);
  return doc;
}

template <class T>
T required(const Json& json, const char* key) {
  if (!json.contains(key)) throw ParseError(std::string("document is missing field '") + key + "'");
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("document field '") + key + "' has the wrong type");
  }
}

}  // namespace

PolyDocument make_document(const CharClassPoly& poly) {
  PolyDocument doc = base_document("char_class", poly.poly());
  doc.mode = poly.mode();
  doc.m = poly.m();
  doc.n = poly.n();
  return doc;
}

PolyDocument make_document(const TruncSeries& series) {
  PolyDocument doc = base_document("series", series.poly());
  doc.order = series.order();
  return doc;
}

PolyDocument make_document(const ProjSpaceClass& value) {
  PolyDocument doc = base_document("proj_space", value.series().poly());
  doc.order = value.dim();
  return doc;
}

PolyDocument make_elementary_document(const GradedPoly& poly, int order) {
  PolyDocument doc = base_document("elementary", poly);
  doc.order = order;
  return doc;
}

Json to_json(const PolyDocument& doc) {
  Json json;
  json["schema_version"] = doc.schema_version;
  json["kind"] = doc.kind;
  json["symbol_mode"] = to_string(doc.mode);
  json["ranks"] = Json{{"m", doc.m}, {"n", doc.n}};
  json["cutoff"] = doc.cutoff;
  if (doc.order) json["order"] = *doc.order;
  json["variables"] = doc.variables;
  Json terms = Json::array();
  for (const auto& term : doc.terms) {
    Json powers = Json::object();
    for (const auto& [name, power] : term.powers) powers[name] = power;
    terms.push_back(Json{{"coeff", term.coeff.to_string()}, {"powers", powers}});
  }
  json["terms"] = std::move(terms);
  return json;
}

namespace {

bool is_generator_name(const std::string& name, std::size_t cutoff) {
  if (name.size() < 2 || name[0] != 'p' || name[1] == '0') return false;
  if (name.find_first_not_of("0123456789", 1) != std::string::npos || name.size() > 6) return false;
  return std::stoul(name.substr(1)) <= cutoff;
}

}  // namespace

PolyDocument document_from_json(const Json& json) {
  if (!json.is_object()) throw ParseError("a polynomial document must be a JSON object");
  PolyDocument doc;
  doc.schema_version = required<std::string>(json, "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    throw ParseError("unsupported schema_version '" + doc.schema_version + "'");
  }
  doc.kind = required<std::string>(json, "kind");
  if (doc.kind != "char_class" && doc.kind != "series" && doc.kind != "proj_space" && doc.kind != "elementary") {
    throw ParseError("unknown document kind '" + doc.kind + "'");
  }
  try {
    doc.mode = symbol_mode_from_string(required<std::string>(json, "symbol_mode"));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
  const Json ranks = required<Json>(json, "ranks");
  doc.m = required<int>(ranks, "m");
  doc.n = required<int>(ranks, "n");
  if (doc.m < 0 || doc.n < 0) throw ParseError("ranks must be non-negative");
  const long cutoff = required<long>(json, "cutoff");
  if (cutoff < 1) throw ParseError("cutoff must be positive");
  doc.cutoff = static_cast<std::size_t>(cutoff);
  if (json.contains("order")) doc.order = required<int>(json, "order");
  if (doc.kind != "char_class" && !doc.order) throw ParseError("document of kind '" + doc.kind + "' needs an order");
  doc.variables = required<std::vector<std::string>>(json, "variables");

  const Json terms = required<Json>(json, "terms");
  if (!terms.is_array()) throw ParseError("document field 'terms' must be an array");
  for (const auto& entry : terms) {
    if (!entry.is_object()) throw ParseError("each term must be an object");
    Term term;
    try {
      term.coeff = Rational::parse(required<std::string>(entry, "coeff"));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    if (term.coeff.is_zero()) throw ParseError("terms must not have zero coefficients");
    const Json powers = required<Json>(entry, "powers");
    if (!powers.is_object()) throw ParseError("term field 'powers' must be an object");
    for (const auto& [name, power] : powers.items()) {
      if (!power.is_number_unsigned() && !(power.is_number_integer() && power.get<long>() >= 0)) {
        throw ParseError("power of '" + name + "' must be a non-negative integer");
      }
      if (power.get<long>() == 0) throw ParseError("power of '" + name + "' must be positive");
      if (!is_generator_name(name, doc.cutoff) &&
          std::find(doc.variables.begin(), doc.variables.end(), name) == doc.variables.end()) {
        throw ParseError("symbol '" + name + "' is neither a declared variable nor p1..p" +
                         std::to_string(doc.cutoff));
      }
      term.powers.emplace_back(name, power.get<std::uint32_t>());
    }
    doc.terms.push_back(std::move(term));
  }
  return doc;
}

PolyDocument document_from_text(const std::string& text) {
  try {
    return document_from_json(Json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

GradedPoly body_of(const PolyDocument& doc) {
  std::vector<std::uint32_t> weights;
  for (const auto& name : doc.variables) weights.push_back(indexed_weights(doc.kind) ? trailing_index(name) : 1);
  const VariablesPtr vars = make_variables(doc.variables, weights);
  GradedPoly body(vars, doc.cutoff);
  for (const auto& term : doc.terms) {
    Exponents outer(vars->size(), 0);
    Exponents inner(doc.cutoff, 0);
    for (const auto& [name, power] : term.powers) {
      if (auto index = vars->index_of(name)) {
        outer[*index] += power;
        continue;
      }
      if (name.size() >= 2 && name[0] == 'p' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t g = std::stoul(name.substr(1));
        if (g < 1 || g > doc.cutoff) {
          throw ParseError("symbol '" + name + "' exceeds generator cutoff " + std::to_string(doc.cutoff));
        }
        inner[g - 1] += power;
        continue;
      }
      throw ParseError("unknown symbol '" + name + "'");
    }
    LambdaPoly coefficient(doc.cutoff);
    coefficient.add_term(inner, term.coeff);
    body.add_term(outer, coefficient);
  }
  return body;
}

CharClassPoly char_class_from(const PolyDocument& doc) {
  if (doc.kind != "char_class") throw ParseError("expected a char_class document, got '" + doc.kind + "'");
  if (doc.variables != CharClassPoly::variables_for(doc.m, doc.n)->names) {
    throw ParseError("char_class variables must be a1..am followed by b1..bn");
  }
  return CharClassPoly(doc.m, doc.n, body_of(doc).relabeled(CharClassPoly::variables_for(doc.m, doc.n)), doc.mode);
}

namespace {

GradedPoly bounded_body(const PolyDocument& doc) {
  GradedPoly body = body_of(doc);
  if (const auto g = body.max_grade(); g && *g > *doc.order) {
    throw ParseError("document has a term of degree " + std::to_string(*g) + " above its order " +
                     std::to_string(*doc.order));
  }
  return body;
}

}  // namespace

TruncSeries series_from(const PolyDocument& doc) {
  if (doc.kind != "series") throw ParseError("expected a series document, got '" + doc.kind + "'");
  return TruncSeries(bounded_body(doc), *doc.order);
}

ProjSpaceClass proj_space_from(const PolyDocument& doc) {
  if (doc.kind != "proj_space") throw ParseError("expected a proj_space document, got '" + doc.kind + "'");
  if (doc.variables != std::vector<std::string>{"x"}) throw ParseError("proj_space documents use the single variable x");
  return ProjSpaceClass::from_series(TruncSeries(bounded_body(doc), *doc.order), *doc.order);
}

}  // namespace cobord::cli
