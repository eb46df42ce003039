#pragma once

#include <string>

#include "json.hpp"
#include "tsrforge/primitivity.hpp"
#include "tsrforge/search.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

using Json = nlohmann::json;

Json field_to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

/// {"q", "m", "n", "c": [c_1..c_{n-1}], "B": [[...]]}
Json spec_to_json(const TsrSpec& spec);
/// Reads the normalized form, or the general form with "A" and "c" = [c_0..c_{n-1}].
TsrSpec spec_from_json(const Json& j);

/// {"field", "poly", "group_order", "factors": [[p, e], ...], "witnesses": [...]}
Json certificate_to_json(const PrimitivityCertificate& cert);
PrimitivityCertificate certificate_from_json(const Json& j);

Json search_result_to_json(const SearchResult& r);
Json witness_to_json(const ConjectureWitness& w);

/// Single-line dump, the form every CLI command emits.
std::string dump_line(const Json& j);

}  // namespace tsrforge
