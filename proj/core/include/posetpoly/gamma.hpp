#pragma once

// The order polytope O(P), the chain polytope C(P), and the three
// symmetric pairings Γ(O(P), -O(Q)), Γ(O(P), -C(Q)), Γ(C(P), -C(Q)).

#include <string>
#include <string_view>
#include <vector>

#include "posetpoly/lattice_polytope.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

enum class PairingKind { OO, OC, CC, OrderOnly, ChainOnly };

std::string to_string(PairingKind kind);

/// Parses "OO", "OC", "CC", "O", "C" (case-insensitive). Throws InvalidInput.
PairingKind parse_pairing_kind(std::string_view text);

LatticePolytope order_polytope(const Poset& p);
LatticePolytope chain_polytope(const Poset& p);

/// The point set whose hull is Γ: positive family of P, negated nonempty
/// family of Q, and the origin. Sorted, without duplicates.
std::vector<IntVector> gamma_points(PairingKind kind, const Poset& p, const Poset& q);

/// Γ for kind in {OO, OC, CC}. Throws PreconditionError on a size mismatch
/// or a single-poset kind.
LatticePolytope gamma(PairingKind kind, const Poset& p, const Poset& q);

}  // namespace posetpoly
