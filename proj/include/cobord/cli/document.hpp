#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord/char_class.hpp"
#include "cobord/cli/render.hpp"
#include "cobord/proj_space.hpp"
#include "cobord/trunc_series.hpp"
#include <nlohmann/json.hpp>

namespace cobord::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Serialized polynomial (schema version "1").
///
///   {
///     "schema_version": "1",
///     "kind": "char_class" | "series" | "proj_space" | "elementary",
///     "symbol_mode": "cobordism" | "cohomology",
///     "ranks": {"m": M, "n": N},
///     "cutoff": K,
///     "order": N,                      // omitted for char_class
///     "variables": ["a1", ..., "b1", ...],
///     "terms": [{"coeff": "-3", "powers": {"p1": 1, "x": 2}}, ...]
///   }
///
/// Coefficients are exact fraction strings; terms are in canonical order.
/// Variable weights follow from the kind: for char_class and elementary the
/// trailing index of the name ("b2" has weight 2), otherwise one.
struct PolyDocument {
  std::string schema_version = kSchemaVersion;
  std::string kind;
  SymbolMode mode = SymbolMode::Cobordism;
  int m = 0;
  int n = 0;
  std::size_t cutoff = kDefaultCutoff;
  std::optional<int> order;
  std::vector<std::string> variables;
  std::vector<Term> terms;

  friend bool operator==(const PolyDocument&, const PolyDocument&) = default;
};

PolyDocument make_document(const CharClassPoly& poly);
PolyDocument make_document(const TruncSeries& series);
PolyDocument make_document(const ProjSpaceClass& value);
/// Polynomial in elementary symmetric functions e1..er, exact to grade `order`.
PolyDocument make_elementary_document(const GradedPoly& poly, int order);

Json to_json(const PolyDocument& doc);
/// Throws ParseError on schema violations.
PolyDocument document_from_json(const Json& json);
/// Parses JSON text; syntax errors carry line and column.
PolyDocument document_from_text(const std::string& text);

/// Rebuilds the polynomial over the document's variables.
GradedPoly body_of(const PolyDocument& doc);
CharClassPoly char_class_from(const PolyDocument& doc);
TruncSeries series_from(const PolyDocument& doc);
ProjSpaceClass proj_space_from(const PolyDocument& doc);

}  // namespace cobord::cli
