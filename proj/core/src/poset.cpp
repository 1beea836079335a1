#include "posetpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "posetpoly/errors.hpp"

namespace posetpoly {

namespace {

bool bit(ElementMask m, int i) { return (m >> i) & 1ULL; }

void check_size(int d) {
  if (d < 1 || d > kMaxPosetSize) {
    throw InvalidInput("poset size must be in 1.." + std::to_string(kMaxPosetSize) + ", got " +
                       std::to_string(d));
  }
}

// Transitive closure of a strict relation given as strict down-sets.
std::vector<ElementMask> close_transitively(std::vector<ElementMask> below) {
  const int d = static_cast<int>(below.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < d; ++i) {
      ElementMask acc = below[i];
      for (ElementMask rest = below[i]; rest != 0; rest &= rest - 1) {
        acc |= below[std::countr_zero(rest)];
      }
      if (acc != below[i]) {
        below[i] = acc;
        changed = true;
      }
    }
  }
  return below;
}

}  // namespace

Poset Poset::build(int d, std::vector<ElementMask> down) {
  auto data = std::make_shared<Data>();
  data->d = d;
  data->down = std::move(down);
  data->up.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (bit(data->down[i], j)) data->up[j] |= 1ULL << i;
    }
  }
  for (int b = 0; b < d; ++b) {
    const ElementMask strict_below = data->down[b] & ~(1ULL << b);
    for (int a = 0; a < d; ++a) {
      if (!bit(strict_below, a)) continue;
      // a < b is a cover iff nothing sits strictly between.
      const ElementMask between = strict_below & data->up[a] & ~(1ULL << a);
      if (between == 0) data->covers.emplace_back(a + 1, b + 1);
    }
  }
  std::sort(data->covers.begin(), data->covers.end());

  ElementMask placed = 0;
  for (int step = 0; step < d; ++step) {
    for (int i = 0; i < d; ++i) {
      if (bit(placed, i)) continue;
      if ((data->down[i] & ~(1ULL << i) & ~placed) == 0) {
        data->linear.push_back(i);
        placed |= 1ULL << i;
        break;
      }
    }
  }
  return Poset(std::move(data));
}

Poset Poset::from_covers(int d, const std::vector<CoverPair>& covers) {
  check_size(d);
  std::vector<ElementMask> below(d, 0);
  std::set<CoverPair> seen;
  for (const auto& [a, b] : covers) {
    if (a < 1 || a > d || b < 1 || b > d) {
      throw InvalidInput("cover (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an index outside 1.." + std::to_string(d));
    }
    if (a == b) throw InvalidInput("cycle detected: cover (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (!seen.insert({a, b}).second) {
      throw InvalidInput("duplicate cover (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    below[b - 1] |= 1ULL << (a - 1);
  }
  below = close_transitively(std::move(below));
  for (int i = 0; i < d; ++i) {
    if (bit(below[i], i)) throw InvalidInput("cycle detected through element " + std::to_string(i + 1));
  }
  for (int i = 0; i < d; ++i) below[i] |= 1ULL << i;
  return build(d, std::move(below));
}

Poset Poset::from_strict_relation(int d, std::vector<ElementMask> below) {
  check_size(d);
  if (static_cast<int>(below.size()) != d) throw InvalidInput("relation has wrong number of rows");
  for (int i = 0; i < d; ++i) {
    if (bit(below[i], i)) throw InvalidInput("relation is not irreflexive");
    if (below[i] >> d) throw InvalidInput("relation mentions elements beyond d");
    for (ElementMask rest = below[i]; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if ((below[j] & ~below[i]) != 0) throw InvalidInput("relation is not transitive");
      if (bit(below[j], i)) throw InvalidInput("relation is not antisymmetric");
    }
  }
  for (int i = 0; i < d; ++i) below[i] |= 1ULL << i;
  return build(d, std::move(below));
}

Poset Poset::chain(int d) {
  std::vector<CoverPair> covers;
  for (int i = 1; i < d; ++i) covers.emplace_back(i, i + 1);
  return from_covers(d, covers);
}

Poset Poset::antichain(int d) { return from_covers(d, {}); }

bool Poset::is_ideal(ElementMask s) const {
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) {
    if ((data_->down[std::countr_zero(rest)] & ~s) != 0) return false;
  }
  return (s & ~all()) == 0;
}

bool Poset::is_antichain(ElementMask s) const {
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (((data_->down[i] | data_->up[i]) & s & ~(1ULL << i)) != 0) return false;
  }
  return (s & ~all()) == 0;
}

ElementMask Poset::maximal_elements(ElementMask s) const {
  ElementMask out = 0;
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if ((data_->up[i] & s & ~(1ULL << i)) == 0) out |= 1ULL << i;
  }
  return out;
}

ElementMask Poset::minimal_elements(ElementMask s) const {
  ElementMask out = 0;
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if ((data_->down[i] & s & ~(1ULL << i)) == 0) out |= 1ULL << i;
  }
  return out;
}

ElementMask Poset::down_closure(ElementMask s) const {
  ElementMask out = 0;
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) out |= data_->down[std::countr_zero(rest)];
  return out;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.data_ == b.data_ || (a.data_->d == b.data_->d && a.data_->down == b.data_->down);
}

std::string Poset::to_string() const {
  std::ostringstream os;
  os << "d=" << size() << " covers=[";
  for (std::size_t k = 0; k < covers().size(); ++k) {
    if (k) os << ",";
    os << "(" << covers()[k].first << "," << covers()[k].second << ")";
  }
  os << "]";
  return os.str();
}

PosetSubset::PosetSubset(const Poset& parent, ElementMask members, SubsetKind kind)
    : parent_(parent), members_(members), kind_(kind) {
  if ((members & ~parent.all()) != 0) throw InvalidInput("subset mentions elements outside the poset");
  if (kind == SubsetKind::Ideal && !parent.is_ideal(members)) {
    throw InvalidInput("subset tagged as ideal is not downward closed");
  }
  if (kind == SubsetKind::Antichain && !parent.is_antichain(members)) {
    throw InvalidInput("subset tagged as antichain has comparable elements");
  }
}

int PosetSubset::cardinality() const { return std::popcount(members_); }

std::vector<int> PosetSubset::labels() const {
  std::vector<int> out;
  for (ElementMask rest = members_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::vector<ElementMask> ideal_masks(const Poset& p) {
  // Decide elements along a linear extension: an element may join only if
  // all of its predecessors (already decided) joined. Each ideal is reached
  // by exactly one include/exclude path.
  const auto& order = p.linear_order();
  std::vector<ElementMask> out;
  std::vector<std::pair<std::size_t, ElementMask>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, current] = stack.back();
    stack.pop_back();
    if (k == order.size()) {
      out.push_back(current);
      continue;
    }
    const int e = order[k];
    const ElementMask preds = p.down_set(e) & ~(1ULL << e);
    if ((preds & ~current) == 0) stack.emplace_back(k + 1, current | (1ULL << e));
    stack.emplace_back(k + 1, current);
  }
  std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

std::vector<ElementMask> antichain_masks(const Poset& p, std::optional<int> size_filter) {
  const int d = p.size();
  std::vector<ElementMask> out;
  std::vector<std::pair<int, ElementMask>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, current] = stack.back();
    stack.pop_back();
    if (k == d) {
      if (!size_filter || std::popcount(current) == *size_filter) out.push_back(current);
      continue;
    }
    if (size_filter && std::popcount(current) > *size_filter) continue;
    const ElementMask related = (p.down_set(k) | p.up_set(k)) & ~(1ULL << k);
    if ((related & current) == 0) stack.emplace_back(k + 1, current | (1ULL << k));
    stack.emplace_back(k + 1, current);
  }
  std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

std::vector<PosetSubset> ideals(const Poset& p) {
  std::vector<PosetSubset> out;
  for (ElementMask m : ideal_masks(p)) out.emplace_back(p, m, SubsetKind::Ideal);
  return out;
}

std::vector<PosetSubset> antichains(const Poset& p, std::optional<int> size_filter) {
  std::vector<PosetSubset> out;
  for (ElementMask m : antichain_masks(p, size_filter)) out.emplace_back(p, m, SubsetKind::Antichain);
  return out;
}

PosetSubset max_elements(const PosetSubset& ideal) {
  if (ideal.kind() != SubsetKind::Ideal) throw PreconditionError("max_elements expects an ideal");
  return PosetSubset(ideal.parent(), ideal.parent().maximal_elements(ideal.members()), SubsetKind::Antichain);
}

PosetSubset ideal_from_antichain(const Poset& p, const PosetSubset& antichain) {
  if (antichain.kind() != SubsetKind::Antichain) {
    throw PreconditionError("ideal_from_antichain expects an antichain");
  }
  if (!(antichain.parent() == p)) throw PreconditionError("antichain belongs to a different poset");
  return PosetSubset(p, p.down_closure(antichain.members()), SubsetKind::Ideal);
}

ElementMask star_mask(const Poset& p, ElementMask a, ElementMask b) {
  const ElementMask generators =
      p.maximal_elements(a & b) & (p.maximal_elements(a) | p.maximal_elements(b));
  return p.down_closure(generators);
}

PosetSubset star(const PosetSubset& a, const PosetSubset& b) {
  if (!(a.parent() == b.parent())) throw PreconditionError("star: ideals of different posets");
  if (a.kind() != SubsetKind::Ideal || b.kind() != SubsetKind::Ideal) {
    throw PreconditionError("star expects two ideals");
  }
  return PosetSubset(a.parent(), star_mask(a.parent(), a.members(), b.members()), SubsetKind::Ideal);
}

std::uint64_t count_linear_extensions(const Poset& p) {
  // Number of maximal chains from the empty ideal to P: f(I) = sum over
  // maximal x of I of f(I \ x), filled in order of increasing size.
  const auto masks = ideal_masks(p);
  std::unordered_map<ElementMask, std::uint64_t> ways;
  ways.reserve(masks.size() * 2);
  for (ElementMask ideal : masks) {
    if (ideal == 0) {
      ways[0] = 1;
      continue;
    }
    std::uint64_t total = 0;
    for (ElementMask rest = p.maximal_elements(ideal); rest != 0; rest &= rest - 1) {
      const std::uint64_t w = ways.at(ideal & ~(rest & -rest));
      if (__builtin_add_overflow(total, w, &total)) throw std::overflow_error("e(P) exceeds 64 bits");
    }
    ways[ideal] = total;
  }
  return ways.at(p.all());
}

bool has_common_linear_extension(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw PreconditionError("has_common_linear_extension: size mismatch");
  const int d = p.size();
  std::vector<ElementMask> below(d);
  for (int i = 0; i < d; ++i) below[i] = (p.down_set(i) | q.down_set(i)) & ~(1ULL << i);
  below = close_transitively(std::move(below));
  for (int i = 0; i < d; ++i) {
    if (bit(below[i], i)) return false;
  }
  return true;
}

IntVector rho(ElementMask s, int d) {
  IntVector v(d, 0);
  for (int i = 0; i < d; ++i) v[i] = bit(s, i) ? 1 : 0;
  return v;
}

IntVector rho(const PosetSubset& s) { return rho(s.members(), s.parent().size()); }

void for_each_poset(int d, const std::function<void(const Poset&)>& visit) {
  if (d < 1 || d > kMaxEnumerationSize) {
    throw PreconditionError("enumerate_posets supports 1 <= d <= " + std::to_string(kMaxEnumerationSize));
  }
  std::vector<std::pair<int, int>> pairs;  // (lower, upper)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  const std::uint64_t total = 1ULL << pairs.size();
  std::vector<ElementMask> below(d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(below.begin(), below.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((code >> k) & 1ULL) below[pairs[k].second] |= 1ULL << pairs[k].first;
    }
    bool ok = true;
    for (int j = 0; j < d && ok; ++j) {
      for (ElementMask rest = below[j]; rest != 0 && ok; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        if (bit(below[i], j) || (below[i] & ~below[j]) != 0) ok = false;
      }
    }
    if (ok) visit(Poset::from_strict_relation(d, below));
  }
}

std::vector<Poset> enumerate_posets(int d) {
  std::vector<Poset> out;
  for_each_poset(d, [&](const Poset& p) { out.push_back(p); });
  return out;
}

}  // namespace posetpoly
