#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "posetpoly/errors.hpp"
#include "posetpoly/lattice_polytope.hpp"

namespace posetpoly {

namespace {

// Counts x in Z^d with <a_f, x> <= n * b_f - shift for every facet f.
// Walks the bounding box of nP coordinate by coordinate, pruning a prefix
// as soon as some facet cannot be satisfied by any completion, and solves
// the last coordinate as an interval.
std::uint64_t count_points(const LatticePolytope& p, Int n, Int shift) {
  const int d = p.dim();
  const auto& facets = p.facets();
  const std::size_t nf = facets.size();

  IntVector lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Int mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = n * mn;
    hi[i] = n * mx;
  }

  IntVector rhs(nf);
  for (std::size_t f = 0; f < nf; ++f) rhs[f] = n * facets[f].offset - shift;

  // rest_min[i][f]: least value of sum_{j >= i} a_fj x_j over the box.
  std::vector<IntVector> rest_min(d + 1, IntVector(nf, 0));
  for (int i = d - 1; i >= 0; --i) {
    for (std::size_t f = 0; f < nf; ++f) {
      const Int a = facets[f].normal[i];
      rest_min[i][f] = rest_min[i + 1][f] + std::min(a * lo[i], a * hi[i]);
    }
  }

  std::vector<IntVector> partial(d, IntVector(nf, 0));
  std::uint64_t total = 0;

  std::function<void(int)> walk = [&](int level) {
    const IntVector& acc = partial[level];
    if (level == d - 1) {
      Int low = lo[level], high = hi[level];
      for (std::size_t f = 0; f < nf && low <= high; ++f) {
        const Int a = facets[f].normal[level];
        const Int room = rhs[f] - acc[f];
        if (a > 0) {
          high = std::min(high, floor_div(room, a));
        } else if (a < 0) {
          low = std::max(low, ceil_div(room, a));
        } else if (room < 0) {
          high = low - 1;
        }
      }
      if (high >= low) total += static_cast<std::uint64_t>(high - low + 1);
      return;
    }
    IntVector& next = partial[level + 1];
    for (Int x = lo[level]; x <= hi[level]; ++x) {
      bool feasible = true;
      for (std::size_t f = 0; f < nf; ++f) {
        next[f] = acc[f] + facets[f].normal[level] * x;
        if (next[f] + rest_min[level + 1][f] > rhs[f]) {
          feasible = false;
          break;
        }
      }
      if (feasible) walk(level + 1);
    }
  };
  walk(0);
  return total;
}

std::string rational_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::int64_t factorial(int d) {
  std::int64_t f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

// Affine dimension of a set of vertices.
int affine_dim(const LatticePolytope& p, const std::vector<int>& face) {
  if (face.empty()) return -1;
  IntMatrix diffs;
  const auto& base = p.vertices()[face.front()];
  for (std::size_t k = 1; k < face.size(); ++k) {
    IntVector v = p.vertices()[face[k]];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= base[i];
    diffs.push_back(std::move(v));
  }
  return rank(std::move(diffs));
}

}  // namespace

std::uint64_t lattice_point_count(const LatticePolytope& p, std::int64_t n) {
  if (n < 0) throw PreconditionError("lattice_point_count requires n >= 0");
  if (n == 0) return 1;
  return count_points(p, n, 0);
}

std::uint64_t interior_lattice_point_count(const LatticePolytope& p) { return count_points(p, 1, 1); }

EhrhartPolynomial::EhrhartPolynomial(std::vector<mpq_class> coefficients) : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
}

EhrhartPolynomial EhrhartPolynomial::interpolate(std::span<const std::uint64_t> values) {
  // Newton forward differences: f(n) = sum_k (Δ^k f)(0) * C(n, k).
  const std::size_t m = values.size();
  std::vector<mpq_class> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = mpq_class(mpz_class(std::to_string(values[i])));
  std::vector<mpq_class> leading(m);
  for (std::size_t k = 0; k < m; ++k) {
    leading[k] = diff[0];
    for (std::size_t i = 0; i + 1 < m - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  std::vector<mpq_class> coeffs(m, 0);
  std::vector<mpq_class> falling{1};  // n (n-1) ... (n-k+1) in the monomial basis
  mpq_class kfact = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0) {
      kfact *= static_cast<unsigned long>(k);
      std::vector<mpq_class> next(falling.size() + 1, 0);
      const mpq_class shift = -static_cast<long>(k - 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] += falling[i] * shift;
      }
      falling = std::move(next);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += leading[k] * falling[i] / kfact;
  }
  return EhrhartPolynomial(std::move(coeffs));
}

mpq_class EhrhartPolynomial::evaluate(const mpq_class& n) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::vector<std::string> EhrhartPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coefficients_) out.push_back(rational_string(c));
  return out;
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coefficients_[k];
    if (c == 0 && !(k == 0 && first)) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpq_class mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || k == 0) os << rational_string(mag);
    if (k >= 1) os << (unit ? "" : " ") << "n";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

EhrhartPolynomial ehrhart(const LatticePolytope& p) {
  const int d = p.dim();
  std::vector<std::uint64_t> counts;
  for (int n = 0; n <= d; ++n) counts.push_back(lattice_point_count(p, n));
  EhrhartPolynomial poly = EhrhartPolynomial::interpolate(counts);

  if (poly.degree() != d || poly.coefficient(d) <= 0) {
    throw ConsistencyError("Ehrhart interpolation produced degree " + std::to_string(poly.degree()) +
                           " for a " + std::to_string(d) + "-polytope");
  }
  if (poly.coefficient(0) != 1) throw ConsistencyError("Ehrhart polynomial has constant term != 1");
  const std::uint64_t check = lattice_point_count(p, d + 1);
  if (poly.evaluate(d + 1) != mpq_class(mpz_class(std::to_string(check)))) {
    throw ConsistencyError("Ehrhart polynomial mispredicts the count at n = d+1");
  }
  return poly;
}

std::int64_t triangulation_volume(const LatticePolytope& p) {
  // Pulling triangulation: pull the least vertex of a face and cone it over
  // every facet of the face that avoids it.
  const int d = p.dim();
  std::int64_t total = 0;
  std::vector<int> apexes;

  std::function<void(const std::vector<int>&, int)> pull = [&](const std::vector<int>& face, int k) {
    if (static_cast<int>(face.size()) == k + 1) {
      std::vector<int> simplex = apexes;
      simplex.insert(simplex.end(), face.begin(), face.end());
      const auto& base = p.vertices()[simplex.front()];
      IntMatrix m;
      for (std::size_t s = 1; s < simplex.size(); ++s) {
        IntVector v = p.vertices()[simplex[s]];
        for (int i = 0; i < d; ++i) v[i] -= base[i];
        m.push_back(std::move(v));
      }
      total += std::abs(determinant(std::move(m)));
      return;
    }
    const int apex = face.front();
    std::set<std::vector<int>> subfacets;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const auto& fv = p.facet_vertices(f);
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(meet));
      if (meet.empty() || meet.front() == apex) continue;
      if (static_cast<int>(meet.size()) < k) continue;
      if (subfacets.count(meet)) continue;
      if (affine_dim(p, meet) == k - 1) subfacets.insert(std::move(meet));
    }
    apexes.push_back(apex);
    for (const auto& sub : subfacets) pull(sub, k - 1);
    apexes.pop_back();
  };

  std::vector<int> all(p.vertices().size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  pull(all, d);
  return total;
}

std::int64_t normalized_volume(const LatticePolytope& p, const EhrhartPolynomial& known) {
  const int d = p.dim();
  const mpq_class scaled = known.coefficient(d) * factorial(d);
  if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) {
    throw ConsistencyError("d! * leading Ehrhart coefficient is not a machine integer");
  }
  const std::int64_t from_ehrhart = scaled.get_num().get_si();
  const std::int64_t from_triangulation = triangulation_volume(p);
  if (from_ehrhart != from_triangulation) {
    throw ConsistencyError("normalized volume mismatch: Ehrhart gives " + std::to_string(from_ehrhart) +
                           ", triangulation gives " + std::to_string(from_triangulation));
  }
  return from_ehrhart;
}

std::int64_t normalized_volume(const LatticePolytope& p) { return normalized_volume(p, ehrhart(p)); }

}  // namespace posetpoly
