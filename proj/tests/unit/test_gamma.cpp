#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/fano.hpp"
#include "posetpoly/gamma.hpp"

using namespace posetpoly;

namespace {

const Poset kUp = Poset::chain(2);
const Poset kDown = Poset::from_covers(2, {{2, 1}});

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

IntVector indicator(ElementMask s, int d, Int sign) {
  IntVector v(d, 0);
  for (int i = 0; i < d; ++i) {
    if (oracle::bit(s, i)) v[i] = sign;
  }
  return v;
}

// Ψ rebuilt from the brute-force ideal and antichain families.
std::set<IntVector> psi(PairingKind k, const Poset& p, const Poset& q) {
  const int d = p.size();
  std::set<IntVector> out{IntVector(d, 0)};
  const auto pos = k == PairingKind::CC ? oracle::antichains(p) : oracle::ideals(p);
  const auto neg = k == PairingKind::OO ? oracle::ideals(q) : oracle::antichains(q);
  for (ElementMask s : pos) out.insert(indicator(s, d, 1));
  for (ElementMask s : neg) out.insert(indicator(s, d, -1));
  return out;
}

}  // namespace

TEST(Gamma, KindNames) {
  for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
    EXPECT_EQ(parse_pairing_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_pairing_kind("XY"), InvalidInput);
}

TEST(Gamma, OrderAndChainPolytopeExamples) {
  EXPECT_EQ(as_set(order_polytope(kUp).vertices()), (std::set<IntVector>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(as_set(chain_polytope(kUp).vertices()), (std::set<IntVector>{{0, 0}, {1, 0}, {0, 1}}));
  const std::set<IntVector> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(as_set(order_polytope(Poset::antichain(2)).vertices()), square);
  EXPECT_EQ(as_set(chain_polytope(Poset::antichain(2)).vertices()), square);
  EXPECT_EQ(normalized_volume(order_polytope(poset_P2(3))), 2);
  EXPECT_EQ(ehrhart(order_polytope(poset_P2(3))), ehrhart(chain_polytope(poset_P2(3))));
}

TEST(Gamma, PairingExamples) {
  const auto a = Poset::antichain(2);
  EXPECT_EQ(gamma(PairingKind::CC, a, a), del_pezzo(2));

  const auto oo = gamma(PairingKind::OO, kUp, kDown);
  EXPECT_EQ(oo.vertices().size(), 4u);
  EXPECT_TRUE(oo.contains(IntVector{0, 0}));
  EXPECT_FALSE(contains_origin_interior(oo));

  const auto oc = gamma(PairingKind::OC, kUp, kDown);
  EXPECT_EQ(as_set(oc.vertices()), (std::set<IntVector>{{1, 0}, {1, 1}, {-1, 0}, {0, -1}}));
}

TEST(Gamma, SizeMismatch) {
  EXPECT_THROW(gamma(PairingKind::OC, Poset::chain(2), Poset::chain(3)), PreconditionError);
  EXPECT_THROW(gamma_points(PairingKind::OO, Poset::chain(3), Poset::chain(2)), PreconditionError);
}

class GammaPairs : public ::testing::TestWithParam<int> {};

TEST_P(GammaPairs, PointSetsMatchDefinition) {
  const auto posets = enumerate_posets(GetParam());
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
        EXPECT_EQ(as_set(gamma_points(k, p, q)), psi(k, p, q));
      }
    }
  }
}

TEST_P(GammaPairs, InteriorOriginAndGorensteinFano) {
  const auto posets = enumerate_posets(GetParam());
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      const bool cle = oracle::common_linear_extension(p, q);
      for (PairingKind k : {PairingKind::OC, PairingKind::CC}) {
        const auto g = gamma(k, p, q);
        ASSERT_TRUE(contains_origin_interior(g));
        EXPECT_TRUE(is_fano(g));
        EXPECT_TRUE(is_gorenstein(g));
      }
      const auto oo = gamma(PairingKind::OO, p, q);
      EXPECT_EQ(contains_origin_interior(oo), cle) << p.to_string() << " " << q.to_string();
      EXPECT_EQ(is_fano(oo), cle);
      if (cle) {
        EXPECT_TRUE(is_gorenstein(oo));
      }
    }
  }
}

TEST_P(GammaPairs, EhrhartEqualities) {
  const auto posets = enumerate_posets(GetParam());
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      const auto oc = ehrhart(gamma(PairingKind::OC, p, q));
      EXPECT_EQ(oc, ehrhart(gamma(PairingKind::CC, p, q)));
      EXPECT_EQ(oc, ehrhart(gamma(PairingKind::CC, q, p)));
      if (oracle::common_linear_extension(p, q)) {
        EXPECT_EQ(oc, ehrhart(gamma(PairingKind::OO, p, q)));
      }
    }
  }
}

TEST_P(GammaPairs, SmoothImpliesGorensteinAndSimplicial) {
  const auto posets = enumerate_posets(GetParam());
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      for (PairingKind k : {PairingKind::OC, PairingKind::CC}) {
        const auto g = gamma(k, p, q);
        if (is_smooth(g)) {
          EXPECT_TRUE(is_gorenstein(g));
          EXPECT_TRUE(is_simplicial(g));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, GammaPairs, ::testing::Values(1, 2, 3));

TEST(Gamma, OppositeChainsPolynomials) {
  EXPECT_EQ(ehrhart(gamma(PairingKind::OO, kUp, kDown)).to_string(), "3/2 n^2 + 5/2 n + 1");
  EXPECT_EQ(ehrhart(gamma(PairingKind::OC, kUp, kDown)).to_string(), "2 n^2 + 2 n + 1");
  EXPECT_EQ(ehrhart(gamma(PairingKind::CC, kUp, kDown)).to_string(), "2 n^2 + 2 n + 1");
}

// Even at d = 2 with all three polygons smooth, OC differs from the others:
// its vertices satisfy (1,1) + (0,-1) = (1,0), the square's do not.
TEST(Gamma, PlanarChainsOcIsNotEquivalentToCc) {
  const auto oo = gamma(PairingKind::OO, kUp, kUp);
  const auto oc = gamma(PairingKind::OC, kUp, kUp);
  const auto cc = gamma(PairingKind::CC, kUp, kUp);
  for (const auto* g : {&oo, &oc, &cc}) EXPECT_TRUE(is_smooth(*g));
  EXPECT_TRUE(oracle::equivalent(oo.vertices(), cc.vertices()));
  EXPECT_FALSE(oracle::equivalent(oc.vertices(), cc.vertices()));
  EXPECT_FALSE(unimodular_equivalent(oc, cc));
  EXPECT_EQ(ehrhart(oc), ehrhart(cc));
}
