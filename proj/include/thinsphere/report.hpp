#pragma once

// Structured (JSON) and DOT renderings of results. Output is deterministic:
// objects serialize with sorted keys and no floating-point values.

#include <string>
#include <vector>

#include <json.hpp>

#include "thinsphere/analysis.hpp"
#include "thinsphere/verify.hpp"

namespace thinsphere::report {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Wraps a body as {"schema_version", "command", "result"}.
Json document(const std::string& command, Json result);

Json to_json(const Cycle& c);
Json to_json(const ValidationReport& r);
Json to_json(const LocalMove& m);
Json to_json(const CycleClass& c);
Json to_json(const ThinResult& r);  // width, ordering, profile, maxima, minima
Json to_json(const GeodesicEntry& e);
Json to_json(const GeodesicReport& r);
Json to_json(const StableGeodesicsResult& r);
Json to_json(const VerificationRecord& r);

/// Dual graph of t (one node per face, one edge per shared edge). Each
/// highlighted cycle colours the dual edges that cross it.
std::string dual_dot(const Triangulation& t, const std::vector<Cycle>& highlight);

}  // namespace thinsphere::report
