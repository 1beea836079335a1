#include "posetpoly/fano.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "posetpoly/errors.hpp"

namespace posetpoly {

namespace {

void require_even_dim(int dim, const char* what) {
  if (dim < 2 || dim % 2 != 0) throw PreconditionError(std::string(what) + " requires an even dimension >= 2");
}

std::vector<IntVector> cross_points(int dim) {
  std::vector<IntVector> points;
  for (int i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    points.push_back(e);
    e[i] = -1;
    points.push_back(e);
  }
  return points;
}

void require_same_size(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw PreconditionError("posets must have the same size");
  if (p.size() < 2) throw PreconditionError("smoothness criteria require d >= 2");
}

// 2-antichains as masks, ascending.
std::vector<ElementMask> pairs_of(const Poset& p) { return antichain_masks(p, 2); }

bool pairwise_disjoint(const std::vector<ElementMask>& sets) {
  ElementMask seen = 0;
  for (ElementMask s : sets) {
    if (seen & s) return false;
    seen |= s;
  }
  return true;
}

ElementMask bottom_pair(const ChainShape& shape) { return (1ULL << shape.order[0]) | (1ULL << shape.order[1]); }

}  // namespace

LatticePolytope interval() {
  const std::vector<IntVector> points{{-1}, {1}};
  return LatticePolytope::hull(points);
}

LatticePolytope del_pezzo(int dim) {
  require_even_dim(dim, "del_pezzo");
  auto points = cross_points(dim);
  points.emplace_back(dim, 1);
  points.emplace_back(dim, -1);
  return LatticePolytope::hull(points);
}

LatticePolytope pseudo_del_pezzo(int dim) {
  require_even_dim(dim, "pseudo_del_pezzo");
  auto points = cross_points(dim);
  points.emplace_back(dim, 1);
  return LatticePolytope::hull(points);
}

Poset poset_P1(int d) { return Poset::chain(d); }

Poset poset_P2(int d) {
  if (d < 2) throw PreconditionError("P2 requires d >= 2");
  std::vector<CoverPair> covers;
  if (d >= 3) {
    covers.emplace_back(1, 3);
    covers.emplace_back(2, 3);
  }
  for (int i = 3; i < d; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(d, covers);
}

std::optional<ChainShape> chain_shape(const Poset& p) {
  const int d = p.size();
  std::vector<std::pair<int, int>> incomparable;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (!p.comparable(i, j)) incomparable.emplace_back(i, j);
    }
  }
  if (incomparable.size() > 1) return std::nullopt;

  ChainShape shape;
  shape.order.resize(d);
  for (int i = 0; i < d; ++i) shape.order[i] = i;
  // Every element outside the incomparable pair is comparable to all, so
  // down-set sizes give the order.
  std::sort(shape.order.begin(), shape.order.end(), [&](int a, int b) {
    const int sa = std::popcount(p.down_set(a)), sb = std::popcount(p.down_set(b));
    return sa != sb ? sa < sb : a < b;
  });
  if (incomparable.empty()) return shape;

  const auto [a, b] = incomparable.front();
  const ElementMask minimal = p.minimal_elements(p.all());
  if (!((minimal >> a) & 1ULL) || !((minimal >> b) & 1ULL)) return std::nullopt;
  shape.is_chain = false;
  return shape;
}

bool ccs_smooth_condition(const Poset& p, const Poset& q) {
  require_same_size(p, q);
  const auto ap = pairs_of(p);
  const auto aq = pairs_of(q);
  if (!pairwise_disjoint(ap) || !pairwise_disjoint(aq)) return false;
  for (ElementMask i : ap) {
    for (ElementMask j : aq) {
      if (std::popcount(i & j) == 1) return false;
    }
  }
  return true;
}

bool ocs_smooth_condition(const Poset& p, const Poset& q) {
  require_same_size(p, q);
  const auto shape = chain_shape(p);
  if (!shape) return false;
  if (!antichain_masks(q, 3).empty()) return false;
  const ElementMask bottom = bottom_pair(*shape);
  const auto aq = pairs_of(q);
  return std::all_of(aq.begin(), aq.end(), [&](ElementMask j) { return j == bottom; });
}

bool oos_smooth_condition(const Poset& p, const Poset& q) {
  require_same_size(p, q);
  if (!has_common_linear_extension(p, q)) {
    throw PreconditionError("oos_smooth_condition requires a common linear extension");
  }
  const auto sp = chain_shape(p);
  const auto sq = chain_shape(q);
  if (!sp || !sq) return false;
  if (bottom_pair(*sp) != bottom_pair(*sq)) return false;
  if (!std::equal(sp->order.begin() + 2, sp->order.end(), sq->order.begin() + 2)) return false;
  if (sp->is_chain && sq->is_chain) return sp->order[0] == sq->order[0];
  return true;
}

SplitProfile split_decompose(const Poset& p, const Poset& q) {
  if (!ccs_smooth_condition(p, q)) {
    throw PreconditionError("split_decompose requires the CC smoothness condition");
  }
  const int d = p.size();
  const auto ap = pairs_of(p);
  const auto aq = pairs_of(q);
  const std::set<ElementMask> in_q(aq.begin(), aq.end());
  const std::set<ElementMask> in_p(ap.begin(), ap.end());

  auto block_of = [](BlockKind kind, ElementMask pair, int sign) {
    SplitBlock b;
    b.kind = kind;
    b.sign = sign;
    for (ElementMask rest = pair; rest != 0; rest &= rest - 1) b.coords.push_back(std::countr_zero(rest));
    return b;
  };

  SplitProfile profile;
  ElementMask used = 0;
  for (ElementMask pair : ap) {
    if (in_q.count(pair)) {
      profile.blocks.push_back(block_of(BlockKind::DelPezzo2, pair, 1));
      ++profile.n;
      used |= pair;
    }
  }
  for (ElementMask pair : ap) {
    if (!in_q.count(pair)) {
      profile.blocks.push_back(block_of(BlockKind::PseudoDelPezzo2, pair, 1));
      ++profile.m;
      used |= pair;
    }
  }
  for (ElementMask pair : aq) {
    if (!in_p.count(pair)) {
      profile.blocks.push_back(block_of(BlockKind::PseudoDelPezzo2, pair, -1));
      ++profile.m;
      used |= pair;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (!((used >> i) & 1ULL)) {
      profile.blocks.push_back({BlockKind::Interval, {i}, 1});
      ++profile.l;
    }
  }
  return profile;
}

std::int64_t predicted_volume(const SplitProfile& profile) {
  std::int64_t v = 1;
  for (int k = 0; k < profile.l; ++k) v *= 2;
  for (int k = 0; k < profile.m; ++k) v *= 5;
  for (int k = 0; k < profile.n; ++k) v *= 6;
  return v;
}

LatticePolytope split_polytope(const SplitProfile& profile) {
  const int d = profile.dim();
  auto points = cross_points(d);
  for (const auto& b : profile.blocks) {
    if (b.kind == BlockKind::Interval) continue;
    IntVector s(d, 0);
    for (int c : b.coords) s[c] = 1;
    if (b.kind == BlockKind::DelPezzo2 || b.sign > 0) points.push_back(s);
    if (b.kind == BlockKind::DelPezzo2 || b.sign < 0) {
      for (Int& x : s) x = -x;
      points.push_back(s);
    }
  }
  return LatticePolytope::hull(points);
}

LatticePolytope canonical_split(const SplitProfile& profile) {
  std::vector<LatticePolytope> factors;
  for (int k = 0; k < profile.l; ++k) factors.push_back(interval());
  for (int k = 0; k < profile.m; ++k) factors.push_back(pseudo_del_pezzo(2));
  for (int k = 0; k < profile.n; ++k) factors.push_back(del_pezzo(2));
  if (factors.empty()) throw PreconditionError("empty split profile");
  LatticePolytope out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = direct_sum(out, factors[k]);
  return out;
}

}  // namespace posetpoly
