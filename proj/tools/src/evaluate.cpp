#include "evaluate.hpp"

#include <algorithm>

#include "commands.hpp"

namespace posetpoly::cli {

GeometryResult measure(const LatticePolytope& p) {
  GeometryResult r;
  r.ehrhart = ehrhart(p);
  r.volume = normalized_volume(p, r.ehrhart);
  r.fano = is_fano(p);
  r.gorenstein = r.fano && is_gorenstein(p);
  r.simplicial = is_simplicial(p);
  r.smooth = r.fano && is_smooth(p);
  r.centrally_symmetric = is_centrally_symmetric(p);
  r.pseudo_symmetric = is_pseudo_symmetric(p);
  for (int n = 0; n <= p.dim() + 1; ++n) {
    const mpq_class v = r.ehrhart.evaluate(n);
    r.counts.push_back(std::stoull(v.get_num().get_str()));
  }
  return r;
}

ToricResult measure_toric(PairingKind kind, const Poset& p, const Poset& q, int degree_cap) {
  ToricResult t;
  const ToricRing ring(kind, p, q);
  const auto g = generators_G(ring);
  t.variables = ring.num_variables();
  t.generators = g.size();
  t.buchberger = buchberger_check(ring, g, degree_cap);
  t.initial_is_first = std::all_of(g.begin(), g.end(), [&](const Binomial& b) {
    return ring.order().initial(b) == b.first;
  });
  if (!t.buchberger.passed()) return t;
  const auto initial = initial_monomials(g, ring.order());
  t.squarefree = std::all_of(initial.begin(), initial.end(), [](const Monomial& m) { return m.is_squarefree(); });
  const bool quadratic = std::all_of(initial.begin(), initial.end(), [](const Monomial& m) { return m.degree() == 2; });
  if (*t.squarefree && quadratic) {
    for (int n = 0; n <= p.size() + 1; ++n) t.hilbert.push_back(hilbert_function(initial, ring.num_variables(), n));
  }
  return t;
}

nlohmann::json to_json(const GeometryResult& g) {
  return {{"ehrhart", coefficients_json(g.ehrhart)},
          {"ehrhart_text", g.ehrhart.to_string()},
          {"normalized_volume", g.volume},
          {"fano", g.fano},
          {"gorenstein", g.gorenstein},
          {"simplicial", g.simplicial},
          {"smooth", g.smooth},
          {"centrally_symmetric", g.centrally_symmetric},
          {"pseudo_symmetric", g.pseudo_symmetric}};
}

nlohmann::json to_json(const ToricResult& t) {
  nlohmann::json j{{"variables", t.variables},
                   {"generators", t.generators},
                   {"generators_in_ideal", t.buchberger.generators_in_ideal},
                   {"s_pairs_reduce", t.buchberger.s_pairs_reduce},
                   {"s_pairs_checked", t.buchberger.s_pairs_checked},
                   {"kernel_reduces", t.buchberger.kernel_reduces},
                   {"fibers_checked", t.buchberger.fibers_checked},
                   {"groebner_basis", t.buchberger.passed()},
                   {"initial_is_first_monomial", t.initial_is_first}};
  j["squarefree"] = t.squarefree ? nlohmann::json(*t.squarefree) : nlohmann::json(nullptr);
  j["hilbert"] = t.hilbert.empty() ? nlohmann::json(nullptr) : nlohmann::json(t.hilbert);
  return j;
}

}  // namespace posetpoly::cli
