#include <algorithm>
#include <functional>
#include <utility>

#include "posetpoly/errors.hpp"
#include "posetpoly/lattice_polytope.hpp"

namespace posetpoly {

namespace {

// Unimodular maps preserve both of these per vertex.
using VertexSignature = std::pair<bool, std::size_t>;

std::vector<VertexSignature> signatures(const LatticePolytope& p) {
  std::vector<VertexSignature> out;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    IntVector neg = p.vertices()[v];
    for (Int& x : neg) x = -x;
    out.emplace_back(p.has_vertex(neg), p.vertex_facets(v).size());
  }
  return out;
}

std::vector<int> independent_vertices(const LatticePolytope& p) {
  std::vector<int> chosen;
  IntMatrix rows;
  for (std::size_t v = 0; v < p.vertices().size() && static_cast<int>(chosen.size()) < p.dim(); ++v) {
    rows.push_back(p.vertices()[v]);
    if (rank(rows) == static_cast<int>(rows.size())) {
      chosen.push_back(static_cast<int>(v));
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace

std::optional<UnimodularMap> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (!is_fano(p) || !is_fano(q)) throw PreconditionError("unimodular_equivalent requires Fano polytopes");
  const int d = p.dim();
  if (q.dim() != d || p.vertices().size() != q.vertices().size() || p.facets().size() != q.facets().size()) {
    return std::nullopt;
  }
  const auto sig_p = signatures(p);
  const auto sig_q = signatures(q);
  {
    auto a = sig_p, b = sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  const std::vector<int> base = independent_vertices(p);
  IntMatrix base_rows;
  for (int v : base) base_rows.push_back(p.vertices()[v]);
  const Int det_base = determinant(base_rows);
  const IntMatrix adj_base = adjugate(base_rows);

  // Candidate images per base vertex; an identical vector is tried first.
  std::vector<std::vector<int>> candidates(d);
  for (int j = 0; j < d; ++j) {
    const IntVector& src = p.vertices()[base[j]];
    for (std::size_t w = 0; w < q.vertices().size(); ++w) {
      if (sig_q[w] == sig_p[base[j]]) candidates[j].push_back(static_cast<int>(w));
    }
    std::stable_partition(candidates[j].begin(), candidates[j].end(),
                          [&](int w) { return q.vertices()[w] == src; });
  }

  std::vector<int> image(d, -1);
  std::vector<bool> used(q.vertices().size(), false);
  std::optional<UnimodularMap> found;

  auto try_tuple = [&]() -> bool {
    IntMatrix targets;
    for (int w : image) targets.push_back(q.vertices()[w]);
    IntMatrix u = multiply(adj_base, targets);
    for (auto& row : u) {
      for (Int& x : row) {
        if (x % det_base != 0) return false;
        x /= det_base;
      }
    }
    const Int det_u = determinant(u);
    if (det_u != 1 && det_u != -1) return false;
    for (const auto& v : p.vertices()) {
      if (!q.has_vertex(row_times(v, u))) return false;
    }
    found.emplace(std::move(u));
    return true;
  };

  std::function<bool(int)> search = [&](int j) -> bool {
    if (j == d) return try_tuple();
    for (int w : candidates[j]) {
      if (used[w]) continue;
      used[w] = true;
      image[j] = w;
      const bool done = search(j + 1);
      used[w] = false;
      if (done) return true;
    }
    return false;
  };
  search(0);
  return found;
}

}  // namespace posetpoly
