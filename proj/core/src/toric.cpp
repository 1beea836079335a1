#include "posetpoly/toric.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "posetpoly/errors.hpp"

namespace posetpoly {

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= divisor.exponents_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    out.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
  }
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
  }
  return true;
}

// ------------------------------------------------------- MonomialOrderSpec

MonomialOrderSpec::MonomialOrderSpec(PairingKind kind, std::vector<ToricVariable> ascending)
    : kind_(kind), variables_(std::move(ascending)) {}

bool MonomialOrderSpec::less(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.num_variables(); ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

// --------------------------------------------------------------- ToricRing

namespace {

bool by_size_then_bits(ElementMask a, ElementMask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

std::vector<ToricVariable> ascending_variables(PairingKind kind, const Poset& p, const Poset& q) {
  if (kind != PairingKind::OO && kind != PairingKind::OC && kind != PairingKind::CC) {
    throw PreconditionError("toric rings exist only for the OO, OC and CC pairings");
  }
  if (p.size() != q.size()) throw PreconditionError("toric ring: |P| != |Q|");
  const bool x_by_max = kind == PairingKind::CC;
  const bool y_by_max = kind != PairingKind::OO;

  std::vector<ToricVariable> out;
  out.push_back({VariableClass::Z, 0, 0});
  auto add_class = [&](const Poset& poset, VariableClass cls, bool by_max) {
    auto masks = ideal_masks(poset);
    std::sort(masks.begin(), masks.end(), by_size_then_bits);
    for (ElementMask m : masks) {
      if (m == 0) continue;
      out.push_back({cls, m, by_max ? poset.maximal_elements(m) : m});
    }
  };
  add_class(q, VariableClass::Y, y_by_max);
  add_class(p, VariableClass::X, x_by_max);
  return out;
}

}  // namespace

ToricRing::ToricRing(PairingKind kind, const Poset& p, const Poset& q)
    : kind_(kind),
      p_(p),
      q_(q),
      variables_(ascending_variables(kind, p, q)),
      order_(kind, variables_) {
  const int d = p.size();
  p_ideals_ = ideal_masks(p);
  q_ideals_ = ideal_masks(q);
  x_index_.assign(p_ideals_.size(), 0);
  y_index_.assign(q_ideals_.size(), 0);
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    const auto& var = variables_[v];
    IntVector t(d, 0);
    if (var.cls == VariableClass::X) {
      t = rho(var.label, d);
      const auto it = std::find(p_ideals_.begin(), p_ideals_.end(), var.ideal);
      x_index_[it - p_ideals_.begin()] = v;
    } else if (var.cls == VariableClass::Y) {
      t = rho(var.label, d);
      for (Int& e : t) e = -e;
      const auto it = std::find(q_ideals_.begin(), q_ideals_.end(), var.ideal);
      y_index_[it - q_ideals_.begin()] = v;
    }
    images_.push_back(std::move(t));
  }
}

std::size_t ToricRing::x(ElementMask ideal) const {
  if (ideal == 0) return z();
  const auto it = std::find(p_ideals_.begin(), p_ideals_.end(), ideal);
  if (it == p_ideals_.end()) throw PreconditionError("not an ideal of P");
  return x_index_[it - p_ideals_.begin()];
}

std::size_t ToricRing::y(ElementMask ideal) const {
  if (ideal == 0) return z();
  const auto it = std::find(q_ideals_.begin(), q_ideals_.end(), ideal);
  if (it == q_ideals_.end()) throw PreconditionError("not an ideal of Q");
  return y_index_[it - q_ideals_.begin()];
}

std::string ToricRing::name(std::size_t var) const {
  const auto& v = variables_.at(var);
  if (v.cls == VariableClass::Z) return "z";
  const char letter = v.cls == VariableClass::X ? 'p' : 'q';
  std::ostringstream os;
  os << (v.cls == VariableClass::X ? "x_{" : "y_{");
  bool first = true;
  for (ElementMask rest = v.label; rest != 0; rest &= rest - 1) {
    if (!first) os << ",";
    os << letter << (std::countr_zero(rest) + 1);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string ToricRing::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = m.num_variables(); v-- > 0;) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) os << "*";
    os << name(v);
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string ToricRing::to_string(const Binomial& b) const { return to_string(b.first) + " - " + to_string(b.second); }

std::vector<ToricVariable> variables(PairingKind kind, const Poset& p, const Poset& q) {
  return ascending_variables(kind, p, q);
}

MonomialOrderSpec monomial_order(PairingKind kind, const Poset& p, const Poset& q) {
  return MonomialOrderSpec(kind, ascending_variables(kind, p, q));
}

ImageVector exponent_image(const ToricRing& ring, const Monomial& m) {
  ImageVector out{IntVector(ring.dim(), 0), 0};
  for (std::size_t v = 0; v < m.num_variables(); ++v) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    const auto& t = ring.image(v);
    for (int i = 0; i < ring.dim(); ++i) out.t[i] += e * t[i];
    out.s += e;
  }
  return out;
}

bool in_toric_ideal(const ToricRing& ring, const Binomial& b) {
  return exponent_image(ring, b.first) == exponent_image(ring, b.second);
}

// -------------------------------------------------------------- generators

std::vector<Binomial> generators_G(const ToricRing& ring) {
  const Poset& p = ring.p();
  const Poset& q = ring.q();
  const PairingKind kind = ring.kind();
  const auto p_ideals = ideal_masks(p);
  const auto q_ideals = ideal_masks(q);

  std::vector<Binomial> out;
  std::set<std::pair<Monomial, Monomial>> seen;
  auto emit = [&](Monomial first, Monomial second) {
    if (first == second) return;
    if (seen.insert({first, second}).second) out.push_back({std::move(first), std::move(second)});
  };
  auto incomparable = [](ElementMask a, ElementMask b) { return (a & ~b) != 0 && (b & ~a) != 0; };

  // (i) / (iv) / (vii): pairs of incomparable ideals of P.
  for (std::size_t a = 0; a < p_ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < p_ideals.size(); ++b) {
      const ElementMask i1 = p_ideals[a], i2 = p_ideals[b];
      if (!incomparable(i1, i2)) continue;
      const ElementMask low = kind == PairingKind::CC ? star_mask(p, i1, i2) : (i1 & i2);
      emit(ring.product(ring.x(i1), ring.x(i2)), ring.product(ring.x(i1 | i2), ring.x(low)));
    }
  }
  // (ii) / (v) / (viii): pairs of incomparable ideals of Q.
  for (std::size_t a = 0; a < q_ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < q_ideals.size(); ++b) {
      const ElementMask j1 = q_ideals[a], j2 = q_ideals[b];
      if (!incomparable(j1, j2)) continue;
      const ElementMask low = kind == PairingKind::OO ? (j1 & j2) : star_mask(q, j1, j2);
      emit(ring.product(ring.y(j1), ring.y(j2)), ring.product(ring.y(j1 | j2), ring.y(low)));
    }
  }
  // (iii) / (vi) / (ix): an index i maximal on both sides.
  for (ElementMask ideal_p : p_ideals) {
    if (ideal_p == 0) continue;
    const ElementMask max_p = p.maximal_elements(ideal_p);
    for (ElementMask ideal_q : q_ideals) {
      if (ideal_q == 0) continue;
      const ElementMask max_q = q.maximal_elements(ideal_q);
      for (ElementMask shared = max_p & max_q; shared != 0; shared &= shared - 1) {
        const ElementMask e = shared & -shared;
        // Removing a maximal element leaves an ideal; removing it from
        // max(·) leaves an antichain, keyed by the ideal it generates.
        const ElementMask lower_p =
            kind == PairingKind::CC ? p.down_closure(max_p & ~e) : (ideal_p & ~e);
        const ElementMask lower_q =
            kind == PairingKind::OO ? (ideal_q & ~e) : q.down_closure(max_q & ~e);
        emit(ring.product(ring.x(ideal_p), ring.y(ideal_q)), ring.product(ring.x(lower_p), ring.y(lower_q)));
      }
    }
  }
  return out;
}

// --------------------------------------------------------------- reduction

namespace {

struct Rule {
  Monomial lead;
  Monomial tail;
};

std::vector<Rule> rules_of(const std::vector<Binomial>& g, const MonomialOrderSpec& order) {
  std::vector<Rule> rules;
  rules.reserve(g.size());
  for (const auto& b : g) {
    if (b.first == b.second) continue;
    rules.push_back({order.initial(b), order.trailing(b)});
  }
  return rules;
}

Monomial normal_form_by(Monomial m, const std::vector<Rule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (r.lead.divides(m)) {
        m = (m / r.lead) * r.tail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

bool s_pairs_reduce_by(const std::vector<Rule>& rules, std::size_t* checked) {
  std::size_t count = 0;
  bool ok = true;
  for (std::size_t a = 0; a < rules.size() && ok; ++a) {
    for (std::size_t b = a + 1; b < rules.size() && ok; ++b) {
      ++count;
      const Monomial l = Monomial::lcm(rules[a].lead, rules[b].lead);
      const Monomial left = (l / rules[a].lead) * rules[a].tail;
      const Monomial right = (l / rules[b].lead) * rules[b].tail;
      if (normal_form_by(left, rules) != normal_form_by(right, rules)) ok = false;
    }
  }
  if (checked) *checked = count;
  return ok;
}

// Every monomial of degree k in n variables, in a fixed order.
void for_each_monomial(std::size_t n, int k, const std::function<void(const Monomial&)>& visit) {
  Monomial m(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == n) {
      m.multiply_by(var, left);
      visit(m);
      m.multiply_by(var, -left);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.multiply_by(var, e);
      rec(var + 1, left - e);
      m.multiply_by(var, -e);
    }
  };
  if (n == 0) return;
  rec(0, k);
}

}  // namespace

Monomial normal_form(const Monomial& m, const std::vector<Binomial>& g, const MonomialOrderSpec& order) {
  return normal_form_by(m, rules_of(g, order));
}

std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& g, const MonomialOrderSpec& order) {
  const auto rules = rules_of(g, order);
  Binomial out{normal_form_by(b.first, rules), normal_form_by(b.second, rules)};
  if (out.first == out.second) return std::nullopt;
  return out;
}

bool s_pairs_reduce(const std::vector<Binomial>& g, const MonomialOrderSpec& order, std::size_t* checked) {
  return s_pairs_reduce_by(rules_of(g, order), checked);
}

BuchbergerReport buchberger_check(const ToricRing& ring, const std::vector<Binomial>& g, int degree_cap) {
  BuchbergerReport report;
  report.generators_in_ideal =
      std::all_of(g.begin(), g.end(), [&](const Binomial& b) { return in_toric_ideal(ring, b); });
  if (!report.generators_in_ideal) return report;

  const auto rules = rules_of(g, ring.order());
  report.s_pairs_reduce = s_pairs_reduce_by(rules, &report.s_pairs_checked);

  // Fibers of the presentation map in each degree: two monomials with the
  // same image differ by an element of the toric ideal, so all members of a
  // fiber must share one normal form.
  report.kernel_reduces = true;
  for (int k = 1; k <= degree_cap && report.kernel_reduces; ++k) {
    std::map<IntVector, Monomial> fiber_normal_form;
    for_each_monomial(ring.num_variables(), k, [&](const Monomial& m) {
      if (!report.kernel_reduces) return;
      const IntVector key = exponent_image(ring, m).t;
      Monomial nf = normal_form_by(m, rules);
      const auto [it, inserted] = fiber_normal_form.emplace(key, nf);
      if (!inserted && it->second != nf) report.kernel_reduces = false;
    });
    report.fibers_checked += fiber_normal_form.size();
  }
  return report;
}

bool buchberger_verify(const ToricRing& ring, const std::vector<Binomial>& g, int degree_cap) {
  return buchberger_check(ring, g, degree_cap).passed();
}

std::vector<Monomial> initial_monomials(const std::vector<Binomial>& g, const MonomialOrderSpec& order) {
  std::vector<Monomial> out;
  for (const auto& b : g) out.push_back(order.initial(b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool initial_ideal_squarefree(const ToricRing& ring, const std::vector<Binomial>& g, int degree_cap) {
  if (!buchberger_verify(ring, g, degree_cap)) {
    throw PreconditionError("initial_ideal_squarefree: G is not a verified Gröbner basis");
  }
  const auto initial = initial_monomials(g, ring.order());
  return std::all_of(initial.begin(), initial.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool initial_ideal_squarefree(const std::vector<Binomial>& g, const MonomialOrderSpec& order) {
  if (!s_pairs_reduce(g, order)) {
    throw PreconditionError("initial_ideal_squarefree: G is not a Gröbner basis of the ideal it generates");
  }
  const auto initial = initial_monomials(g, order);
  return std::all_of(initial.begin(), initial.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

// ---------------------------------------------------------------- Hilbert

std::uint64_t hilbert_function(const std::vector<Monomial>& initial, std::size_t num_variables, int n) {
  if (n < 0) return 0;
  if (num_variables > 64) throw PreconditionError("hilbert_function supports at most 64 variables");
  // Standard monomials of a squarefree quadratic monomial ideal: supports are
  // the independent sets of the graph whose edges are the initial monomials.
  std::vector<std::uint64_t> neighbours(num_variables, 0);
  for (const auto& m : initial) {
    if (m.num_variables() != num_variables) throw PreconditionError("hilbert_function: ring size mismatch");
    if (m.degree() != 2 || !m.is_squarefree()) {
      throw PreconditionError("hilbert_function expects squarefree quadratic initial monomials");
    }
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < num_variables; ++v) {
      if (m.exponent(v) > 0) support.push_back(v);
    }
    neighbours[support[0]] |= 1ULL << support[1];
    neighbours[support[1]] |= 1ULL << support[0];
  }

  // count(var, left, blocked): standard monomials of degree `left` in the
  // variables var..N-1 avoiding `blocked`.
  struct Key {
    std::size_t var;
    int left;
    std::uint64_t blocked;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.blocked * 1000003ULL + k.var * 131ULL + static_cast<std::uint64_t>(k.left));
    }
  };
  std::unordered_map<Key, std::uint64_t, KeyHash> memo;
  std::function<std::uint64_t(std::size_t, int, std::uint64_t)> count =
      [&](std::size_t var, int left, std::uint64_t blocked) -> std::uint64_t {
    if (left == 0) return 1;
    if (var == num_variables) return 0;
    const std::uint64_t relevant = var == 0 ? blocked : (blocked & ~((1ULL << var) - 1));
    const Key key{var, left, relevant};
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = count(var + 1, left, relevant);
    if (!((relevant >> var) & 1ULL)) {
      for (int e = 1; e <= left; ++e) total += count(var + 1, left - e, relevant | neighbours[var]);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(0, n, 0);
}

}  // namespace posetpoly
