#pragma once

#include <string>

#include <json.hpp>

#include "rltlab/polytope.hpp"

namespace rltlab {

/// Polytope document: {"n": int, "binary": [1-based indices],
/// "rows": [{"coef": ["-2","1"], "rel": "<=", "rhs": "0"}, ...],
/// "description": optional string}. Rationals are "p/q" or integer strings;
/// the box rows 0 <= x_i <= 1 are implicit and never listed.
BoxPolytope polytope_from_json(const nlohmann::json& j);
nlohmann::ordered_json polytope_to_json(const BoxPolytope& P);

/// Reads and validates a polytope document; throws std::runtime_error with
/// the file name on parse or validation problems.
BoxPolytope load_polytope(const std::string& path);

/// Comma-separated rationals, e.g. "1/2,0,1".
RatVector parse_point(const std::string& text);
std::string point_text(const RatVector& x);

nlohmann::ordered_json vec_to_json(const RatVector& v);
RatVector vec_from_json(const nlohmann::json& j);
nlohmann::ordered_json row_to_json(const Row& row);

std::string relation_text(Relation rel);
Relation relation_from_text(const std::string& s);

}  // namespace rltlab
