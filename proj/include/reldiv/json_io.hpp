#pragma once

// JSON documents for divisions, validation reports, closure reports and
// graphs. Keys keep insertion order so output is byte-stable.

#include <string>
#include <string_view>

#include <json.hpp>

#include "reldiv/closures.hpp"
#include "reldiv/division.hpp"
#include "reldiv/graphs.hpp"

namespace reldiv {

using Json = nlohmann::ordered_json;

/// {"n", "degree" (null for general sets), "variables", "multiplicative"},
/// terms in deg-lex order.
Json to_json(const RelDivision& div);
/// Throws ParseError on malformed documents and StructuralError on
/// inconsistent ones (wrong slice, duplicate terms).
RelDivision division_from_json(const Json& doc);
RelDivision parse_division(std::string_view text);

Json to_json(const ValidationReport& report, int n);
Json to_json(const ClosureReport& report);
/// {"nodes": [...], "edges": [[tail, head, label|null], ...]}.
Json to_json(const LabeledDigraph& g);

/// Compact single-line dump.
std::string dump(const Json& doc);

}  // namespace reldiv
