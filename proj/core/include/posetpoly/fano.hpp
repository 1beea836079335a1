#pragma once

// Poset-side smoothness criteria for the three Γ pairings, the split
// decomposition of a smooth Γ(C(P), -C(Q)), and the building blocks it
// splits into.

#include <cstdint>
#include <optional>
#include <vector>

#include "posetpoly/lattice_polytope.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

/// conv(-1, 1).
LatticePolytope interval();

/// conv(±e_1, ..., ±e_dim, ±(e_1 + ... + e_dim)); dim must be even and >= 2.
LatticePolytope del_pezzo(int dim);

/// conv(±e_1, ..., ±e_dim, e_1 + ... + e_dim); dim must be even and >= 2.
LatticePolytope pseudo_del_pezzo(int dim);

/// The chain p_1 < ... < p_d.
Poset poset_P1(int d);

/// p_1, p_2 incomparable and both below p_3 < ... < p_d. Requires d >= 2
/// (at d = 2 this is the antichain).
Poset poset_P2(int d);

/// A poset that is a chain, or a chain whose two least elements are
/// swapped for an incomparable pair. `order` lists the elements bottom-up
/// (0-based); for the second shape the incomparable pair comes first in
/// ascending label order.
struct ChainShape {
  bool is_chain = true;
  std::vector<int> order;
};

std::optional<ChainShape> chain_shape(const Poset& p);

/// Requires |P| = |Q| = d >= 2.
bool ccs_smooth_condition(const Poset& p, const Poset& q);
bool ocs_smooth_condition(const Poset& p, const Poset& q);

/// Additionally requires a common linear extension of P and Q.
bool oos_smooth_condition(const Poset& p, const Poset& q);

enum class BlockKind { Interval, PseudoDelPezzo2, DelPezzo2 };

/// One factor of a split, on 0-based coordinates. For a pseudo del Pezzo
/// block, sign is +1 when e_a + e_b is a vertex and -1 when -(e_a + e_b) is.
struct SplitBlock {
  BlockKind kind = BlockKind::Interval;
  std::vector<int> coords;
  int sign = 1;

  friend bool operator==(const SplitBlock&, const SplitBlock&) = default;
};

struct SplitProfile {
  int l = 0;  // intervals
  int m = 0;  // pseudo del Pezzo 2-polytopes
  int n = 0;  // del Pezzo 2-polytopes
  std::vector<SplitBlock> blocks;  // V_2 blocks, then Ṽ_2 blocks, then intervals

  int dim() const { return l + 2 * m + 2 * n; }
  friend bool operator==(const SplitProfile&, const SplitProfile&) = default;
};

/// Requires ccs_smooth_condition(P, Q); throws PreconditionError otherwise.
SplitProfile split_decompose(const Poset& p, const Poset& q);

/// 2^l * 5^m * 6^n.
std::int64_t predicted_volume(const SplitProfile& profile);

/// The polytope the profile describes, in the original coordinates. Equal
/// to Γ(C(P), -C(Q)) when the profile came from split_decompose.
LatticePolytope split_polytope(const SplitProfile& profile);

/// L^l ⊕ Ṽ_2^m ⊕ V_2^n in block-diagonal coordinates.
LatticePolytope canonical_split(const SplitProfile& profile);

}  // namespace posetpoly
