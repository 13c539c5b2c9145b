#pragma once

#include "symtaut/faces.hpp"
#include "symtaut/region.hpp"
#include "symtaut/taut_ring.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string_view>

namespace symtaut {

using Json = nlohmann::ordered_json;

/// {"g","d","codim","coeffs":[{"x","theta","num","den"}]}, terms by increasing theta.
Json to_json(const TautClass& c);
TautClass class_from_json(const Json& j);

/// List of coordinate vectors, entries as "p" or "p/q" strings.
Json to_json(const Subspace& s);

Json to_json(const Certificate& c);
Json to_json(const FaceDescriptor& f);
Json to_json(const FaceChain& chain);
Json to_json(const RegionCell& cell);
Json to_json(const RegionMap& map);

/// Parses {"1": 2, "2": 4, ...} into r -> gon_r.
std::map<int, int> parse_gonality_overrides(std::string_view text);

}  // namespace symtaut
