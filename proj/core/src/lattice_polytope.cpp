#include <algorithm>
#include <set>

#include "posetpoly/errors.hpp"
#include "posetpoly/lattice_polytope.hpp"

namespace posetpoly {

namespace {

IntVector negated(std::span<const Int> v) {
  IntVector out(v.begin(), v.end());
  for (Int& x : out) x = -x;
  return out;
}

void require_fano(const LatticePolytope& p, const char* what) {
  if (!is_fano(p)) throw PreconditionError(std::string(what) + " requires a Fano polytope");
}

}  // namespace

UnimodularMap::UnimodularMap(IntMatrix u) : u_(std::move(u)) {
  for (const auto& row : u_) {
    if (row.size() != u_.size()) throw PreconditionError("unimodular map must be square");
  }
  const Int det = posetpoly::determinant(u_);
  if (det != 1 && det != -1) throw PreconditionError("matrix is not unimodular (|det| != 1)");
}

Int UnimodularMap::determinant() const { return posetpoly::determinant(u_); }

UnimodularMap UnimodularMap::inverse() const {
  IntMatrix inv = adjugate(u_);
  const Int det = determinant();
  for (auto& row : inv) {
    for (Int& x : row) x *= det;
  }
  return UnimodularMap(std::move(inv));
}

bool contains_origin_interior(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset > 0; });
}

bool is_fano(const LatticePolytope& p) {
  return contains_origin_interior(p) && interior_lattice_point_count(p) == 1;
}

bool is_gorenstein(const LatticePolytope& p) {
  require_fano(p, "is_gorenstein");
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

bool is_simplicial(const LatticePolytope& p) {
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (static_cast<int>(p.facet_vertices(f).size()) != p.dim()) return false;
  }
  return true;
}

bool is_smooth(const LatticePolytope& p) {
  require_fano(p, "is_smooth");
  if (!is_simplicial(p)) return false;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    IntMatrix m;
    for (int v : p.facet_vertices(f)) m.push_back(p.vertices()[v]);
    const Int det = determinant(std::move(m));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

LatticePolytope direct_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (!contains_origin_interior(a) || !contains_origin_interior(b)) {
    throw PreconditionError("direct_sum requires both summands to contain the origin in their interior");
  }
  const int da = a.dim();
  const int db = b.dim();
  std::vector<IntVector> points;
  for (const auto& v : a.vertices()) {
    IntVector w(da + db, 0);
    std::copy(v.begin(), v.end(), w.begin());
    points.push_back(std::move(w));
  }
  for (const auto& v : b.vertices()) {
    IntVector w(da + db, 0);
    std::copy(v.begin(), v.end(), w.begin() + da);
    points.push_back(std::move(w));
  }
  return LatticePolytope::hull(points);
}

bool is_centrally_symmetric(const LatticePolytope& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const IntVector& v) { return p.has_vertex(negated(v)); });
}

bool is_pseudo_symmetric(const LatticePolytope& p) {
  const auto& facets = p.facets();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Facet opposite{negated(facets[f].normal), facets[f].offset};
    const auto it = std::lower_bound(facets.begin(), facets.end(), opposite);
    if (it == facets.end() || !(*it == opposite)) continue;
    const std::size_t g = static_cast<std::size_t>(it - facets.begin());
    std::set<IntVector> mirrored;
    for (int v : p.facet_vertices(f)) mirrored.insert(negated(p.vertices()[v]));
    std::set<IntVector> other;
    for (int v : p.facet_vertices(g)) other.insert(p.vertices()[v]);
    if (mirrored == other) return true;
  }
  return false;
}

LatticePolytope transform(const LatticePolytope& p, const UnimodularMap& u) {
  std::vector<IntVector> images;
  images.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) images.push_back(u.apply(v));
  return LatticePolytope::hull(images);
}

LatticePolytope negate(const LatticePolytope& p) {
  std::vector<IntVector> images;
  for (const auto& v : p.vertices()) images.push_back(negated(v));
  return LatticePolytope::hull(images);
}

}  // namespace posetpoly
