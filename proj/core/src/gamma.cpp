#include "posetpoly/gamma.hpp"

#include <algorithm>
#include <cctype>

#include "posetpoly/errors.hpp"

namespace posetpoly {

std::string to_string(PairingKind kind) {
  switch (kind) {
    case PairingKind::OO: return "OO";
    case PairingKind::OC: return "OC";
    case PairingKind::CC: return "CC";
    case PairingKind::OrderOnly: return "O";
    case PairingKind::ChainOnly: return "C";
  }
  return "?";
}

PairingKind parse_pairing_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "OO") return PairingKind::OO;
  if (upper == "OC") return PairingKind::OC;
  if (upper == "CC") return PairingKind::CC;
  if (upper == "O") return PairingKind::OrderOnly;
  if (upper == "C") return PairingKind::ChainOnly;
  throw InvalidInput("unknown polytope kind '" + std::string(text) + "' (expected OO, OC, CC, O or C)");
}

namespace {

std::vector<IntVector> incidence_vectors(const std::vector<ElementMask>& family, int d, int sign, bool skip_empty) {
  std::vector<IntVector> out;
  for (ElementMask m : family) {
    if (skip_empty && m == 0) continue;
    IntVector v = rho(m, d);
    if (sign < 0) {
      for (Int& x : v) x = -x;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LatticePolytope order_polytope(const Poset& p) {
  const auto points = incidence_vectors(ideal_masks(p), p.size(), +1, false);
  return LatticePolytope::hull(points);
}

LatticePolytope chain_polytope(const Poset& p) {
  const auto points = incidence_vectors(antichain_masks(p), p.size(), +1, false);
  return LatticePolytope::hull(points);
}

std::vector<IntVector> gamma_points(PairingKind kind, const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw PreconditionError("gamma: |P| != |Q|");
  const int d = p.size();
  std::vector<IntVector> points;
  switch (kind) {
    case PairingKind::OO:
      points = incidence_vectors(ideal_masks(p), d, +1, true);
      for (auto& v : incidence_vectors(ideal_masks(q), d, -1, true)) points.push_back(std::move(v));
      break;
    case PairingKind::OC:
      points = incidence_vectors(ideal_masks(p), d, +1, true);
      for (auto& v : incidence_vectors(antichain_masks(q), d, -1, true)) points.push_back(std::move(v));
      break;
    case PairingKind::CC:
      points = incidence_vectors(antichain_masks(p), d, +1, true);
      for (auto& v : incidence_vectors(antichain_masks(q), d, -1, true)) points.push_back(std::move(v));
      break;
    default:
      throw PreconditionError("gamma expects a pairing kind (OO, OC or CC)");
  }
  points.emplace_back(d, 0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

LatticePolytope gamma(PairingKind kind, const Poset& p, const Poset& q) {
  return LatticePolytope::hull(gamma_points(kind, p, q));
}

}  // namespace posetpoly
