#pragma once

// Per-polytope and per-ring measurements shared by analyze and sweep.

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "posetpoly/gamma.hpp"
#include "posetpoly/toric.hpp"

namespace posetpoly::cli {

struct GeometryResult {
  EhrhartPolynomial ehrhart;
  std::int64_t volume = 0;
  bool fano = false;
  bool gorenstein = false;  // Gorenstein Fano
  bool simplicial = false;
  bool smooth = false;      // smooth Fano
  bool centrally_symmetric = false;
  bool pseudo_symmetric = false;
  std::vector<std::uint64_t> counts;  // i(P, n) for n = 0..d+1
};

GeometryResult measure(const LatticePolytope& p);

struct ToricResult {
  std::size_t variables = 0;
  std::size_t generators = 0;
  BuchbergerReport buchberger;
  bool initial_is_first = false;
  std::optional<bool> squarefree;          // set once the basis is verified
  std::vector<std::uint64_t> hilbert;      // n = 0..d+1, when squarefree
};

ToricResult measure_toric(PairingKind kind, const Poset& p, const Poset& q, int degree_cap);

nlohmann::json to_json(const GeometryResult& g);
nlohmann::json to_json(const ToricResult& t);

}  // namespace posetpoly::cli
