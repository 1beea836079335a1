// Convex hull by the double description method.
//
// Facets of conv(V) are the extreme rays (a, b) of the homogenized cone
// { (a, b) : b - <a, v> >= 0 for all v in V }. Rays start from the simplex on
// d+1 affinely independent points and are refined one point at a time.
// Adjacency uses the combinatorial test on zero sets, which stays exact
// for degenerate (non-simplicial) inputs.

#include <algorithm>
#include <bitset>
#include <map>

#include "posetpoly/errors.hpp"
#include "posetpoly/lattice_polytope.hpp"

namespace posetpoly {

namespace {

template <std::size_t N>
struct Ray {
  IntVector coords;  // (a_1..a_d, b)
  std::bitset<N> zero;
};

struct RawHull {
  std::vector<Facet> facets;
  std::vector<std::vector<int>> tight_points;  // per facet, indices into the input
};

IntVector homogenized_row(const IntVector& v) {
  IntVector row(v.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) row[i] = -v[i];
  row.back() = 1;
  return row;
}

std::vector<int> affine_basis(const std::vector<IntVector>& points, int d) {
  std::vector<int> basis;
  IntMatrix rows;
  for (std::size_t k = 0; k < points.size() && static_cast<int>(basis.size()) < d + 1; ++k) {
    rows.push_back(homogenized_row(points[k]));
    if (rank(rows) == static_cast<int>(rows.size())) {
      basis.push_back(static_cast<int>(k));
    } else {
      rows.pop_back();
    }
  }
  return basis;
}

template <std::size_t N>
RawHull double_description(const std::vector<IntVector>& points, int d) {
  const std::size_t m = points.size();
  std::vector<IntVector> rows(m);
  for (std::size_t k = 0; k < m; ++k) rows[k] = homogenized_row(points[k]);

  const std::vector<int> basis = affine_basis(points, d);
  if (static_cast<int>(basis.size()) < d + 1) {
    throw DegenerateHull("points do not affinely span R^" + std::to_string(d));
  }

  IntMatrix base_rows;
  for (int k : basis) base_rows.push_back(rows[k]);
  const Int det = determinant(base_rows);
  const IntMatrix adj = adjugate(base_rows);
  const Int sign = det > 0 ? 1 : -1;

  std::vector<Ray<N>> rays;
  for (int j = 0; j <= d; ++j) {
    Ray<N> ray;
    ray.coords.resize(d + 1);
    for (int i = 0; i <= d; ++i) ray.coords[i] = sign * adj[i][j];
    make_primitive(ray.coords);
    for (int k = 0; k <= d; ++k) {
      if (k != j) ray.zero.set(basis[k]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (int k : basis) in_basis[k] = true;

  const std::size_t min_common = static_cast<std::size_t>(d - 1);
  std::vector<Int> slack;
  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    slack.resize(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      slack[r] = dot(rows[k], rays[r].coords);
      if (slack[r] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (slack[r] == 0) rays[r].zero.set(k);
      }
      continue;
    }

    std::vector<Ray<N>> next;
    next.reserve(rays.size() * 2);
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (slack[r] >= 0) {
        next.push_back(rays[r]);
        if (slack[r] == 0) next.back().zero.set(k);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (slack[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (slack[n] >= 0) continue;
        const std::bitset<N> common = rays[p].zero & rays[n].zero;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if ((common & ~rays[o].zero).none()) adjacent = false;
        }
        if (!adjacent) continue;
        Ray<N> fresh;
        fresh.coords.resize(d + 1);
        for (int i = 0; i <= d; ++i) {
          fresh.coords[i] = slack[p] * rays[n].coords[i] - slack[n] * rays[p].coords[i];
        }
        make_primitive(fresh.coords);
        fresh.zero = common;
        fresh.zero.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  RawHull out;
  for (const auto& ray : rays) {
    Facet f;
    f.normal.assign(ray.coords.begin(), ray.coords.end() - 1);
    f.offset = ray.coords.back();
    const Int g = gcd_of(f.normal);
    if (g == 0) continue;  // (0, b): not a facet of a bounded polytope
    for (Int& x : f.normal) x /= g;
    f.offset /= g;
    std::vector<int> tight;
    for (std::size_t k = 0; k < m; ++k) {
      if (ray.zero.test(k)) tight.push_back(static_cast<int>(k));
    }
    out.facets.push_back(std::move(f));
    out.tight_points.push_back(std::move(tight));
  }
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::span<const IntVector> input) {
  if (input.empty()) throw DegenerateHull("empty point set");
  const int d = static_cast<int>(input.front().size());
  if (d == 0) throw InvalidInput("points must have positive dimension");
  for (const auto& v : input) {
    if (static_cast<int>(v.size()) != d) throw InvalidInput("points of mixed dimension");
  }
  std::vector<IntVector> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RawHull raw;
  if (points.size() <= 64) {
    raw = double_description<64>(points, d);
  } else if (points.size() <= 256) {
    raw = double_description<256>(points, d);
  } else if (points.size() <= 2048) {
    raw = double_description<2048>(points, d);
  } else {
    throw InvalidInput("hull supports at most 2048 distinct points");
  }

  // A point is a vertex iff the normals of the facets through it span R^d.
  std::vector<std::vector<int>> point_facets(points.size());
  for (std::size_t f = 0; f < raw.facets.size(); ++f) {
    for (int k : raw.tight_points[f]) point_facets[k].push_back(static_cast<int>(f));
  }
  std::vector<int> vertex_of_point(points.size(), -1);
  LatticePolytope poly;
  poly.dim_ = d;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (static_cast<int>(point_facets[k].size()) < d) continue;
    IntMatrix normals;
    for (int f : point_facets[k]) normals.push_back(raw.facets[f].normal);
    if (rank(std::move(normals)) == d) {
      vertex_of_point[k] = static_cast<int>(poly.vertices_.size());
      poly.vertices_.push_back(points[k]);
    }
  }

  std::vector<std::size_t> facet_order(raw.facets.size());
  for (std::size_t f = 0; f < facet_order.size(); ++f) facet_order[f] = f;
  std::sort(facet_order.begin(), facet_order.end(),
            [&](std::size_t a, std::size_t b) { return raw.facets[a] < raw.facets[b]; });

  poly.vertex_facets_.assign(poly.vertices_.size(), {});
  for (std::size_t f : facet_order) {
    std::vector<int> on_facet;
    for (int k : raw.tight_points[f]) {
      if (vertex_of_point[k] >= 0) on_facet.push_back(vertex_of_point[k]);
    }
    const int index = static_cast<int>(poly.facets_.size());
    for (int v : on_facet) poly.vertex_facets_[v].push_back(index);
    poly.facets_.push_back(raw.facets[f]);
    poly.facet_vertices_.push_back(std::move(on_facet));
  }
  return poly;
}

std::optional<int> LatticePolytope::vertex_index(std::span<const Int> v) const {
  const IntVector key(v.begin(), v.end());
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

bool LatticePolytope::contains(std::span<const Int> x) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, x) > f.offset) return false;
  }
  return true;
}

}  // namespace posetpoly
