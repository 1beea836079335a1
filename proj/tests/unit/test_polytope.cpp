#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/fano.hpp"
#include "posetpoly/gamma.hpp"
#include "posetpoly/lattice_polytope.hpp"

using namespace posetpoly;

namespace {

LatticePolytope hull_of(std::vector<IntVector> pts) { return LatticePolytope::hull(pts); }

LatticePolytope cross(int d) {
  std::vector<IntVector> pts;
  for (int i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    pts.push_back(e);
    e[i] = -1;
    pts.push_back(e);
  }
  return LatticePolytope::hull(pts);
}

LatticePolytope cube(int d, Int lo, Int hi) {
  std::vector<IntVector> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    IntVector v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(v);
  }
  return LatticePolytope::hull(pts);
}

std::set<std::pair<IntVector, Int>> facet_set(const LatticePolytope& p) {
  std::set<std::pair<IntVector, Int>> out;
  for (const auto& f : p.facets()) out.insert({f.normal, f.offset});
  return out;
}

// Fano + Gorenstein decided from brute-force facets and a full box scan.
bool oracle_gorenstein(const std::vector<IntVector>& pts) {
  const auto facets = oracle::brute_facets(pts);
  for (const auto& [a, b] : facets) {
    if (b != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Hull, CrossPolytope) {
  const auto p = cross(2);
  EXPECT_EQ(p.vertices().size(), 4u);
  const std::set<std::pair<IntVector, Int>> expected{
      {{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}};
  EXPECT_EQ(facet_set(p), expected);
}

TEST(Hull, DelPezzo) {
  const auto v2 = del_pezzo(2);
  EXPECT_EQ(v2.vertices().size(), 6u);
  EXPECT_EQ(v2.facets().size(), 6u);
}

TEST(Hull, InteriorPointDropped) {
  const auto p = hull_of({{0, 0}, {1, 0}, {1, 1}, {-1, 0}, {0, -1}});
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_FALSE(p.has_vertex(IntVector{0, 0}));
}

TEST(Hull, DegenerateAndRaggedInputs) {
  EXPECT_THROW(hull_of({{0, 0}, {1, 1}, {2, 2}}), DegenerateHull);
  EXPECT_THROW(hull_of({{0, 0}, {1}}), InvalidInput);
  EXPECT_THROW(hull_of({}), DegenerateHull);
}

TEST(Hull, FacetsMatchBruteForceOnGammas) {
  for (int d = 2; d <= 3; ++d) {
    for (const auto& p : enumerate_posets(d)) {
      for (const auto& q : enumerate_posets(d)) {
        for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
          const auto pts = gamma_points(k, p, q);
          const auto g = LatticePolytope::hull(pts);
          ASSERT_EQ(facet_set(g), oracle::brute_facets(pts)) << to_string(k) << " " << p.to_string() << " " << q.to_string();
          // Every vertex is tight on >= d facets and every point satisfies all.
          for (const auto& v : pts) EXPECT_TRUE(g.contains(v));
          for (std::size_t f = 0; f < g.facets().size(); ++f) EXPECT_GE(static_cast<int>(g.facet_vertices(f).size()), d);
          // Round trip.
          EXPECT_EQ(LatticePolytope::hull(g.vertices()), g);
        }
      }
    }
  }
}

TEST(Fano, OriginInterior) {
  EXPECT_TRUE(contains_origin_interior(cross(3)));
  EXPECT_FALSE(contains_origin_interior(cube(3, 0, 1)));
  const auto p = Poset::chain(2);
  const auto q = Poset::from_covers(2, {{2, 1}});
  EXPECT_FALSE(contains_origin_interior(gamma(PairingKind::OO, p, q)));
}

TEST(Fano, FanoExamples) {
  EXPECT_TRUE(is_fano(del_pezzo(2)));
  EXPECT_FALSE(is_fano(hull_of({{2, 0}, {-2, 0}, {0, 2}, {0, -2}})));
  EXPECT_FALSE(is_fano(cube(2, 0, 1)));
}

TEST(Fano, GorensteinExamples) {
  EXPECT_TRUE(is_gorenstein(del_pezzo(2)));
  const std::vector<IntVector> tri{{1, 0}, {-1, 0}, {-1, 2}, {-1, -2}};
  const auto t = LatticePolytope::hull(tri);
  ASSERT_TRUE(is_fano(t));
  EXPECT_EQ(is_gorenstein(t), oracle_gorenstein(tri));
  // Every Fano polygon is reflexive, so a counterexample needs d = 3.
  const std::vector<IntVector> non{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-2, -2, -3}};
  const auto n = LatticePolytope::hull(non);
  ASSERT_TRUE(is_fano(n));
  EXPECT_EQ(is_gorenstein(n), oracle_gorenstein(non));
  EXPECT_FALSE(is_gorenstein(n));
  EXPECT_THROW(is_gorenstein(cube(2, 0, 1)), PreconditionError);
}

TEST(Fano, SimplicialExamples) {
  EXPECT_TRUE(is_simplicial(cross(3)));
  EXPECT_FALSE(is_simplicial(cube(3, -1, 1)));
  // A_2(P) = {{p1,p2},{p1,p3}}: p2 < p3.
  const auto p = Poset::from_covers(3, {{2, 3}});
  EXPECT_FALSE(is_simplicial(gamma(PairingKind::CC, p, p)));
}

TEST(Fano, SmoothExamples) {
  EXPECT_TRUE(is_smooth(del_pezzo(2)));
  EXPECT_TRUE(is_smooth(hull_of({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}})));
  EXPECT_FALSE(is_smooth(hull_of({{2, 1}, {-2, -1}, {0, 1}, {0, -1}})));
  EXPECT_THROW(is_smooth(cube(2, 0, 1)), PreconditionError);
}

TEST(Ehrhart, CountExamples) {
  const auto p = Poset::chain(2);
  const auto q = Poset::from_covers(2, {{2, 1}});
  EXPECT_EQ(lattice_point_count(cross(3), 0), 1u);
  EXPECT_EQ(lattice_point_count(gamma(PairingKind::OO, p, q), 1), 5u);
  EXPECT_EQ(lattice_point_count(gamma(PairingKind::OC, p, q), 2), 13u);
  EXPECT_THROW(lattice_point_count(cross(2), -1), PreconditionError);
}

TEST(Ehrhart, PolynomialExamples) {
  EXPECT_EQ(ehrhart(hull_of({{0}, {1}})).to_string(), "n + 1");
  const auto p = Poset::chain(2);
  const auto q = Poset::from_covers(2, {{2, 1}});
  const auto oo = ehrhart(gamma(PairingKind::OO, p, q));
  EXPECT_EQ(oo, EhrhartPolynomial({1, mpq_class(5, 2), mpq_class(3, 2)}));
  EXPECT_EQ(oo.to_string(), "3/2 n^2 + 5/2 n + 1");
  EXPECT_EQ(oo.coefficient_strings(), (std::vector<std::string>{"1", "5/2", "3/2"}));
  EXPECT_EQ(ehrhart(gamma(PairingKind::CC, p, q)), EhrhartPolynomial({1, 2, 2}));
}

TEST(Ehrhart, InterpolationRecoversKnownPolynomial) {
  // (n+1)^3
  const std::vector<std::uint64_t> values{1, 8, 27, 64};
  EXPECT_EQ(EhrhartPolynomial::interpolate(values), EhrhartPolynomial({1, 3, 3, 1}));
  EXPECT_EQ(EhrhartPolynomial({1, 3, 3, 1}).evaluate(4), 125);
}

TEST(Ehrhart, CountsMatchBruteForceAndPredictBeyondInterpolation) {
  for (int d = 2; d <= 3; ++d) {
    const auto posets = enumerate_posets(d);
    for (std::size_t i = 0; i < posets.size(); i += 2) {
      for (std::size_t j = 0; j < posets.size(); j += 3) {
        for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
          const auto pts = gamma_points(k, posets[i], posets[j]);
          const auto g = LatticePolytope::hull(pts);
          const auto facets = oracle::brute_facets(pts);
          const auto e = ehrhart(g);
          // n = d+2 is outside both the interpolation and the internal check.
          for (int n = 0; n <= d + 2; ++n) {
            const auto direct = oracle::count_points(facets, pts, n);
            EXPECT_EQ(lattice_point_count(g, n), direct);
            EXPECT_EQ(e.evaluate(n), mpq_class(static_cast<unsigned long>(direct)));
          }
        }
      }
    }
  }
}

TEST(Ehrhart, OrderAndChainCountsMatchCombinatorialOracles) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : enumerate_posets(d)) {
      const auto o = order_polytope(p);
      const auto c = chain_polytope(p);
      for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(lattice_point_count(o, n), oracle::order_polytope_points(p, n));
        EXPECT_EQ(lattice_point_count(c, n), oracle::chain_polytope_points(p, n));
      }
      EXPECT_EQ(normalized_volume(o), static_cast<std::int64_t>(oracle::linear_extensions(p)));
    }
  }
}

TEST(Volume, BuildingBlocks) {
  EXPECT_EQ(normalized_volume(interval()), 2);
  EXPECT_EQ(normalized_volume(del_pezzo(2)), 6);
  EXPECT_EQ(normalized_volume(pseudo_del_pezzo(2)), 5);
  EXPECT_EQ(normalized_volume(order_polytope(Poset::antichain(2))), 2);
}

TEST(Volume, TriangulationAgreesWithEhrhart) {
  for (const auto& p : {cross(3), cube(3, -1, 1), del_pezzo(4), pseudo_del_pezzo(4)}) {
    const auto e = ehrhart(p);
    mpq_class scaled = e.coefficient(p.dim());
    for (int k = 2; k <= p.dim(); ++k) scaled *= k;
    EXPECT_EQ(mpq_class(triangulation_volume(p)), scaled);
  }
}

TEST(DirectSum, Examples) {
  const auto ll = direct_sum(interval(), interval());
  EXPECT_EQ(ll, cross(2));
  EXPECT_EQ(normalized_volume(direct_sum(interval(), del_pezzo(2))), 12);
  EXPECT_EQ(normalized_volume(direct_sum(direct_sum(interval(), interval()), interval())), 8);
  EXPECT_THROW(direct_sum(interval(), cube(2, 0, 1)), PreconditionError);
}

TEST(Symmetry, Examples) {
  EXPECT_TRUE(is_centrally_symmetric(del_pezzo(2)));
  EXPECT_FALSE(is_centrally_symmetric(pseudo_del_pezzo(2)));
  EXPECT_TRUE(is_pseudo_symmetric(pseudo_del_pezzo(2)));
  EXPECT_FALSE(is_centrally_symmetric(gamma(PairingKind::OC, poset_P1(3), poset_P2(3))));
}

TEST(Equivalence, Examples) {
  const auto p = cross(3);
  const auto id = unimodular_equivalent(p, p);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, UnimodularMap::identity(3));

  const auto a = hull_of({{1, 0}, {-1, 0}, {1, 1}, {-1, -1}});
  const auto b = cross(2);
  const auto u = unimodular_equivalent(a, b);
  ASSERT_TRUE(u);
  EXPECT_EQ(transform(a, *u), b);
  EXPECT_TRUE(oracle::equivalent(a.vertices(), b.vertices()));

  const auto oc = gamma(PairingKind::OC, poset_P1(3), poset_P1(3));
  const auto oo = gamma(PairingKind::OO, poset_P1(3), poset_P1(3));
  EXPECT_FALSE(unimodular_equivalent(oc, oo));
  EXPECT_FALSE(oracle::equivalent(oc.vertices(), oo.vertices()));
  EXPECT_THROW(unimodular_equivalent(cube(2, 0, 1), b), PreconditionError);
}

TEST(Equivalence, WitnessesAreValidAndSymmetric) {
  const auto posets = enumerate_posets(3);
  for (std::size_t i = 0; i < posets.size(); i += 3) {
    for (std::size_t j = 0; j < posets.size(); j += 4) {
      const auto x = gamma(PairingKind::OC, posets[i], posets[j]);
      const auto y = gamma(PairingKind::CC, posets[i], posets[j]);
      const auto fwd = unimodular_equivalent(x, y);
      const auto back = unimodular_equivalent(y, x);
      EXPECT_EQ(fwd.has_value(), back.has_value());
      EXPECT_EQ(fwd.has_value(), oracle::equivalent(x.vertices(), y.vertices()));
      if (fwd) {
        EXPECT_EQ(transform(x, *fwd), y);
        EXPECT_EQ(transform(y, fwd->inverse()), x);
        EXPECT_EQ(ehrhart(x), ehrhart(y));
      }
    }
  }
}

TEST(UnimodularMap, RejectsNonUnimodular) {
  EXPECT_THROW(UnimodularMap(IntMatrix{{2, 0}, {0, 1}}), PreconditionError);
  EXPECT_THROW(UnimodularMap(IntMatrix{{1, 0}}), PreconditionError);
  const UnimodularMap u(IntMatrix{{1, 0}, {-1, 1}});
  EXPECT_EQ(u.apply(IntVector{1, 1}), (IntVector{0, 1}));
  EXPECT_EQ(u.inverse().apply(IntVector{0, 1}), (IntVector{1, 1}));
}
