#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/gamma.hpp"
#include "posetpoly/lattice_polytope.hpp"
#include "posetpoly/toric.hpp"

using namespace posetpoly;

namespace {

const Poset kUp = Poset::chain(2);
const Poset kDown = Poset::from_covers(2, {{2, 1}});

Binomial bin(Monomial a, Monomial b) { return Binomial{std::move(a), std::move(b)}; }

bool contains(const std::vector<Binomial>& g, const Binomial& b) {
  return std::any_of(g.begin(), g.end(), [&](const Binomial& h) {
    return (h.first == b.first && h.second == b.second) || (h.first == b.second && h.second == b.first);
  });
}

// Monomials of degree n in `vars` variables divisible by none of `initial`.
std::uint64_t standard_monomials(const std::vector<Monomial>& initial, std::size_t vars, int n) {
  std::vector<int> e(vars, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == vars) {
      e[v] = left;
      const Monomial m(e);
      if (std::none_of(initial.begin(), initial.end(), [&](const Monomial& i) { return i.divides(m); })) ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
  };
  rec(0, n);
  return count;
}

}  // namespace

TEST(Toric, VariableCounts) {
  for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
    EXPECT_EQ(variables(k, kUp, kUp).size(), 5u);
    EXPECT_EQ(variables(k, Poset::chain(1), Poset::chain(1)).size(), 3u);
  }
  EXPECT_EQ(variables(PairingKind::CC, Poset::antichain(2), Poset::antichain(2)).size(), 7u);
  EXPECT_THROW(ToricRing(PairingKind::OrderOnly, kUp, kUp), PreconditionError);
  EXPECT_THROW(ToricRing(PairingKind::OC, kUp, Poset::chain(3)), PreconditionError);
}

TEST(Toric, ExponentImages) {
  const ToricRing cc(PairingKind::CC, kUp, kUp);
  EXPECT_EQ(exponent_image(cc, cc.variable(cc.z()).multiply_by(cc.z())), (ImageVector{{0, 0}, 2}));
  EXPECT_EQ(exponent_image(cc, cc.product(cc.x(0b01), cc.y(0b01))), (ImageVector{{0, 0}, 2}));
  const ToricRing oo(PairingKind::OO, kUp, kUp);
  EXPECT_EQ(exponent_image(oo, oo.variable(oo.x(0b11))), (ImageVector{{1, 1}, 1}));
}

TEST(Toric, IdealMembership) {
  const ToricRing cc(PairingKind::CC, kUp, kUp);
  const Monomial z2 = cc.product(cc.z(), cc.z());
  EXPECT_TRUE(in_toric_ideal(cc, bin(cc.product(cc.x(0b01), cc.y(0b01)), z2)));
  EXPECT_FALSE(in_toric_ideal(cc, bin(cc.variable(cc.x(0b01)), cc.variable(cc.z()))));
}

TEST(Toric, VariableOrderChains) {
  const ToricRing r(PairingKind::CC, kUp, kUp);
  const auto& asc = r.order().ascending_variables();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < asc.size(); ++v) names.push_back(r.name(v));
  EXPECT_EQ(names, (std::vector<std::string>{"z", "y_{q1}", "y_{q2}", "x_{p1}", "x_{p2}"}));
  const ToricRing o(PairingKind::OO, kUp, kUp);
  EXPECT_EQ(o.name(2), "y_{q1,q2}");
  EXPECT_EQ(o.name(4), "x_{p1,p2}");
  // Revlex: ties in degree are broken by the smallest variable.
  const Monomial zx = o.product(o.z(), o.x(0b11));
  const Monomial xy = o.product(o.x(0b01), o.y(0b11));
  EXPECT_TRUE(o.order().less(zx, xy));
  EXPECT_FALSE(o.order().less(xy, zx));
}

TEST(Toric, GeneratorsCcChains) {
  const ToricRing r(PairingKind::CC, kUp, kUp);
  const auto g = generators_G(r);
  std::vector<std::string> shown;
  for (const auto& b : g) shown.push_back(r.to_string(b));
  std::sort(shown.begin(), shown.end());
  EXPECT_EQ(shown, (std::vector<std::string>{"x_{p1}*y_{q1} - z^2", "x_{p2}*y_{q2} - z^2"}));
  for (const auto& b : g) EXPECT_EQ(r.order().initial(b), b.first);
}

TEST(Toric, GeneratorsAntichainSubstituteZ) {
  const auto a = Poset::antichain(2);
  const ToricRing oo(PairingKind::OO, a, a);
  const auto g = generators_G(oo);
  EXPECT_TRUE(contains(g, bin(oo.product(oo.x(0b01), oo.x(0b10)), oo.product(oo.x(0b11), oo.z()))));

  const ToricRing oc(PairingKind::OC, a, a);
  const auto h = generators_G(oc);
  EXPECT_TRUE(contains(h, bin(oc.product(oc.y(0b01), oc.y(0b10)), oc.product(oc.y(0b11), oc.z()))));
}

TEST(Toric, ReduceExamples) {
  const ToricRing r(PairingKind::CC, kUp, kUp);
  const auto g = generators_G(r);
  for (const auto& b : g) EXPECT_FALSE(reduce(b, {b}, r.order()).has_value());
  const Monomial zx = r.product(r.z(), r.x(0b01));
  EXPECT_FALSE(reduce(bin(zx, zx), g, r.order()).has_value());
  std::size_t checked = 0;
  EXPECT_TRUE(s_pairs_reduce(g, r.order(), &checked));
  EXPECT_EQ(checked, 1u);
}

TEST(Toric, BuchbergerExamples) {
  const ToricRing cc(PairingKind::CC, kUp, kUp);
  EXPECT_TRUE(buchberger_verify(cc, generators_G(cc)));
  EXPECT_TRUE(initial_ideal_squarefree(cc, generators_G(cc)));
  const auto a = Poset::antichain(2);
  const ToricRing oo(PairingKind::OO, a, a);
  EXPECT_TRUE(buchberger_verify(oo, generators_G(oo)));
  EXPECT_TRUE(initial_ideal_squarefree(oo, generators_G(oo)));
}

TEST(Toric, DeletingTheMixedGeneratorBreaksTheBasis) {
  for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
    const ToricRing r(k, kUp, kUp);
    auto g = generators_G(r);
    const auto z2 = r.product(r.z(), r.z());
    const auto it = std::find_if(g.begin(), g.end(), [&](const Binomial& b) { return b.second == z2; });
    ASSERT_NE(it, g.end()) << to_string(k);
    g.erase(it);
    EXPECT_FALSE(buchberger_verify(r, g)) << to_string(k);
  }
}

TEST(Toric, SyntheticNonSquarefree) {
  const ToricRing r(PairingKind::CC, Poset::chain(1), Poset::chain(1));
  // Variables z < y < x; x^2 - y z has leading term x^2.
  const std::size_t x = 2, y = 1, z = 0;
  const std::vector<Binomial> g{bin(r.product(x, x), r.product(y, z))};
  EXPECT_FALSE(initial_ideal_squarefree(g, r.order()));
}

TEST(Toric, NonBasisIsRejectedByPrecondition) {
  const ToricRing r(PairingKind::CC, kUp, kUp);
  auto g = generators_G(r);
  g.pop_back();
  EXPECT_THROW(initial_ideal_squarefree(r, g), PreconditionError);
}

TEST(Toric, HilbertExamples) {
  const ToricRing r(PairingKind::CC, kUp, kUp);
  const auto init = initial_monomials(generators_G(r), r.order());
  EXPECT_EQ(hilbert_function(init, r.num_variables(), 0), 1u);
  EXPECT_EQ(hilbert_function(init, r.num_variables(), 1), r.num_variables());
  EXPECT_EQ(hilbert_function(init, r.num_variables(), 1), lattice_point_count(gamma(PairingKind::CC, kUp, kUp), 1));
}

// Opposite chains have no common linear extension. The binomial below lies
// in the toric ideal of the OO pairing but is not reducible by G_OO.
TEST(Toric, OoNeedsACommonLinearExtension) {
  const ToricRing r(PairingKind::OO, kUp, kDown);
  const auto g = generators_G(r);
  for (const auto& b : g) EXPECT_TRUE(in_toric_ideal(r, b));
  const Binomial witness = bin(r.product(r.x(0b11), r.y(0b11)), r.product(r.z(), r.z()));
  EXPECT_EQ(r.to_string(witness), "x_{p1,p2}*y_{q1,q2} - z^2");
  EXPECT_TRUE(in_toric_ideal(r, witness));
  EXPECT_TRUE(reduce(witness, g, r.order()).has_value());
  const auto report = buchberger_check(r, g);
  EXPECT_TRUE(report.generators_in_ideal);
  EXPECT_TRUE(report.s_pairs_reduce);
  EXPECT_FALSE(report.kernel_reduces);
}

class ToricPairs : public ::testing::TestWithParam<int> {};

TEST_P(ToricPairs, BasisAndHilbertAgreeWithLatticePoints) {
  const int d = GetParam();
  const auto posets = enumerate_posets(d);
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
        const bool cle = oracle::common_linear_extension(p, q);
        const ToricRing r(k, p, q);
        const auto g = generators_G(r);
        for (const auto& b : g) ASSERT_TRUE(in_toric_ideal(r, b));
        EXPECT_TRUE(s_pairs_reduce(g, r.order()));
        const auto report = buchberger_check(r, g, 3);
        EXPECT_EQ(report.passed(), k != PairingKind::OO || cle) << to_string(k) << " " << p.to_string() << " " << q.to_string();
        const auto init = initial_monomials(g, r.order());
        for (const auto& m : init) EXPECT_TRUE(m.is_squarefree());
        if (!report.passed()) continue;
        const auto poly = gamma(k, p, q);
        for (int n = 0; n <= d + 1; ++n) {
          const auto h = hilbert_function(init, r.num_variables(), n);
          if (n <= 3) {
            EXPECT_EQ(h, standard_monomials(init, r.num_variables(), n));
          }
          EXPECT_EQ(h, lattice_point_count(poly, n));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ToricPairs, ::testing::Values(1, 2, 3));
