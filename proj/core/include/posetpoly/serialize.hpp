#pragma once

// JSON formats for posets and polytopes.
//
//   poset:    {"d": 3, "covers": [[1, 3], [2, 3]]}   (1-based; [a, b] means p_a < p_b)
//   polytope: {"d": 2, "vertices": [[...], ...], "facets": [{"a": [...], "b": 1}, ...]}

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "posetpoly/lattice_polytope.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

/// Throws InvalidInput on malformed input.
Poset poset_from_json(const nlohmann::json& j);
Poset parse_poset(const std::string& text);
Poset read_poset_file(const std::string& path);

nlohmann::json to_json(const Poset& p);
nlohmann::json to_json(const LatticePolytope& p);
nlohmann::json to_json(const EhrhartPolynomial& e);

}  // namespace posetpoly
