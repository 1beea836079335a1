#pragma once

// Finite labeled posets on {1..d} and the families indexed by them:
// order ideals, antichains, linear extensions.
//
// Elements are stored 0-based internally (bit i is element i+1); every
// user-facing format (JSON files, reports, error messages) is 1-based.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetpoly/integer_linalg.hpp"

namespace posetpoly {

using ElementMask = std::uint64_t;

inline constexpr int kMaxPosetSize = 62;

/// A cover pair (a, b), 1-based, meaning p_a < p_b.
using CoverPair = std::pair<int, int>;

class PosetSubset;

class Poset {
 public:
  /// Reflexive-transitive closure of the given covers. Throws InvalidInput on
  /// a cycle, an out-of-range index or a repeated pair.
  static Poset from_covers(int d, const std::vector<CoverPair>& covers);

  /// `below[i]` is the set of j with p_j < p_i (strict). Must already be a
  /// strict partial order; checked.
  static Poset from_strict_relation(int d, std::vector<ElementMask> below);

  static Poset chain(int d);
  static Poset antichain(int d);

  int size() const { return data_->d; }
  ElementMask all() const { return (1ULL << data_->d) - 1; }

  /// p_i <= p_j, 0-based.
  bool leq(int i, int j) const { return (data_->down[j] >> i) & 1ULL; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  /// Down-set {j : p_j <= p_i}, including i.
  ElementMask down_set(int i) const { return data_->down[i]; }
  ElementMask up_set(int i) const { return data_->up[i]; }

  /// Cover relations, 1-based, sorted.
  const std::vector<CoverPair>& covers() const { return data_->covers; }

  /// A fixed linear extension (0-based element order).
  const std::vector<int>& linear_order() const { return data_->linear; }

  bool is_ideal(ElementMask s) const;
  bool is_antichain(ElementMask s) const;
  ElementMask maximal_elements(ElementMask s) const;
  ElementMask minimal_elements(ElementMask s) const;
  ElementMask down_closure(ElementMask s) const;

  /// Same relation (labeled equality).
  friend bool operator==(const Poset& a, const Poset& b);

  /// Shared identity used to tie subsets to their parent.
  const void* identity() const { return data_.get(); }

  std::string to_string() const;

 private:
  struct Data {
    int d = 0;
    std::vector<ElementMask> down;
    std::vector<ElementMask> up;
    std::vector<CoverPair> covers;
    std::vector<int> linear;
  };
  explicit Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static Poset build(int d, std::vector<ElementMask> down);

  std::shared_ptr<const Data> data_;
};

enum class SubsetKind { Ideal, Antichain, Arbitrary };

/// A subset of a poset, tagged with what it is known to be.
class PosetSubset {
 public:
  /// Validates the kind against the parent; throws InvalidInput on mismatch.
  PosetSubset(const Poset& parent, ElementMask members, SubsetKind kind);

  const Poset& parent() const { return parent_; }
  ElementMask members() const { return members_; }
  SubsetKind kind() const { return kind_; }
  int cardinality() const;
  bool contains(int i) const { return (members_ >> i) & 1ULL; }
  bool empty() const { return members_ == 0; }

  /// 1-based element labels, ascending.
  std::vector<int> labels() const;

  friend bool operator==(const PosetSubset& a, const PosetSubset& b) {
    return a.members_ == b.members_ && a.kind_ == b.kind_ && a.parent_ == b.parent_;
  }

 private:
  Poset parent_;
  ElementMask members_;
  SubsetKind kind_;
};

std::vector<PosetSubset> ideals(const Poset& p);

/// All antichains, or only those of the given size.
std::vector<PosetSubset> antichains(const Poset& p, std::optional<int> size_filter = std::nullopt);

/// Raw-mask variants used by the polytope and toric builders.
std::vector<ElementMask> ideal_masks(const Poset& p);
std::vector<ElementMask> antichain_masks(const Poset& p, std::optional<int> size_filter = std::nullopt);

/// max(I). Requires kind == Ideal.
PosetSubset max_elements(const PosetSubset& ideal);

/// The ideal generated by an antichain. Requires kind == Antichain.
PosetSubset ideal_from_antichain(const Poset& p, const PosetSubset& antichain);

/// I * I': the ideal generated by max(I ∩ I') ∩ (max(I) ∪ max(I')).
PosetSubset star(const PosetSubset& a, const PosetSubset& b);
ElementMask star_mask(const Poset& p, ElementMask a, ElementMask b);

/// e(P), by dynamic programming over the ideal lattice.
/// Throws std::overflow_error past 2^64.
std::uint64_t count_linear_extensions(const Poset& p);

/// True iff some permutation of [d] extends both orders.
bool has_common_linear_extension(const Poset& p, const Poset& q);

/// 0/1 incidence vector of a subset.
IntVector rho(const PosetSubset& s);
IntVector rho(ElementMask s, int d);

inline constexpr int kMaxEnumerationSize = 5;

/// Every labeled poset on d elements exactly once, in a fixed order.
void for_each_poset(int d, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_posets(int d);

}  // namespace posetpoly
