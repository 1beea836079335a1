#pragma once

// Exact integral polytopes in V- and H-representation, plus the lattice
// invariants computed on them (Ehrhart polynomial, normalized volume,
// Fano/Gorenstein/simplicial/smooth status, unimodular equivalence).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "posetpoly/integer_linalg.hpp"

namespace posetpoly {

/// Half-space <normal, x> <= offset with a primitive integer normal.
struct Facet {
  IntVector normal;
  Int offset = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

class LatticePolytope {
 public:
  /// Convex hull of a finite point set that affinely spans R^d.
  /// Throws DegenerateHull when it does not, InvalidInput on ragged input.
  static LatticePolytope hull(std::span<const IntVector> points);

  int dim() const { return dim_; }

  /// Vertices in lexicographic order.
  const std::vector<IntVector>& vertices() const { return vertices_; }

  /// Facets in lexicographic (normal, offset) order.
  const std::vector<Facet>& facets() const { return facets_; }

  /// Indices into vertices() of the vertices on facet f, ascending.
  const std::vector<int>& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }

  /// Indices into facets() of the facets through vertex v, ascending.
  const std::vector<int>& vertex_facets(std::size_t v) const { return vertex_facets_[v]; }

  std::optional<int> vertex_index(std::span<const Int> v) const;
  bool has_vertex(std::span<const Int> v) const { return vertex_index(v).has_value(); }

  bool contains(std::span<const Int> x) const;

  /// Same vertex set (hence same polytope).
  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;

  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<int>> facet_vertices_;
  std::vector<std::vector<int>> vertex_facets_;
};

/// i(P, n) = sum_k c_k n^k with exact rational coefficients.
class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  explicit EhrhartPolynomial(std::vector<mpq_class> coefficients);

  /// Interpolates the degree-(values.size()-1) polynomial through
  /// (0, values[0]), (1, values[1]), ...
  static EhrhartPolynomial interpolate(std::span<const std::uint64_t> values);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  const mpq_class& coefficient(int k) const { return coefficients_.at(k); }

  mpq_class evaluate(const mpq_class& n) const;

  /// Coefficients as "p/q" or "p" strings, constant term first.
  std::vector<std::string> coefficient_strings() const;

  /// Human-readable form, highest degree first, e.g. "3/2 n^2 + 5/2 n + 1".
  std::string to_string() const;

  friend bool operator==(const EhrhartPolynomial& a, const EhrhartPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<mpq_class> coefficients_;
};

/// Integer d x d matrix acting on row vectors: f_U(v) = v U.
class UnimodularMap {
 public:
  /// Throws PreconditionError unless |det U| = 1.
  explicit UnimodularMap(IntMatrix u);

  static UnimodularMap identity(int d) { return UnimodularMap(identity_matrix(d)); }

  const IntMatrix& matrix() const { return u_; }
  int dim() const { return static_cast<int>(u_.size()); }
  Int determinant() const;
  IntVector apply(std::span<const Int> v) const { return row_times(v, u_); }

  /// U^{-1}, which is integral because |det U| = 1.
  UnimodularMap inverse() const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  IntMatrix u_;
};

bool contains_origin_interior(const LatticePolytope& p);

/// Origin interior and the only interior lattice point.
bool is_fano(const LatticePolytope& p);

/// Requires is_fano. All primitive facet offsets equal 1.
bool is_gorenstein(const LatticePolytope& p);

/// Every facet carries exactly d vertices.
bool is_simplicial(const LatticePolytope& p);

/// Requires is_fano. Simplicial and every facet's vertices form a Z-basis.
bool is_smooth(const LatticePolytope& p);

/// |nP ∩ Z^d|, n >= 0.
std::uint64_t lattice_point_count(const LatticePolytope& p, std::int64_t n);

/// Number of lattice points strictly inside P.
std::uint64_t interior_lattice_point_count(const LatticePolytope& p);

/// Interpolates counts at n = 0..d and cross-checks the prediction at n = d+1.
/// Throws ConsistencyError if the result is not a valid Ehrhart polynomial.
EhrhartPolynomial ehrhart(const LatticePolytope& p);

/// d! * Euclidean volume from a pulling triangulation (independent of counting).
std::int64_t triangulation_volume(const LatticePolytope& p);

/// d! times the leading Ehrhart coefficient, cross-checked against
/// triangulation_volume(). Throws ConsistencyError if they differ.
std::int64_t normalized_volume(const LatticePolytope& p);
std::int64_t normalized_volume(const LatticePolytope& p, const EhrhartPolynomial& known);

/// P1 ⊕ P2 = conv((P1 x 0) ∪ (0 x P2)). Both must contain the origin in
/// their interior.
LatticePolytope direct_sum(const LatticePolytope& a, const LatticePolytope& b);

bool is_centrally_symmetric(const LatticePolytope& p);
bool is_pseudo_symmetric(const LatticePolytope& p);

/// Searches for U with f_U(vertices(P)) = vertices(Q). Both must be Fano.
/// Deterministic: the same inputs always return the same map, and P = Q
/// returns the identity.
std::optional<UnimodularMap> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q);

/// Applies f_U to every vertex and rebuilds the hull.
LatticePolytope transform(const LatticePolytope& p, const UnimodularMap& u);

/// Vertex-wise negation.
LatticePolytope negate(const LatticePolytope& p);

}  // namespace posetpoly
