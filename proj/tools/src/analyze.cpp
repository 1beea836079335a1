#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "evaluate.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/fano.hpp"
#include "posetpoly/serialize.hpp"

namespace posetpoly::cli {

using nlohmann::json;

std::string canonical_check_group(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"1.1", "ehrhart"},   {"1.2", "groebner"},  {"1.4", "hilbert"},   {"1.5", "swap"},
      {"2.1", "cc-smooth"}, {"2.2", "oc-smooth"}, {"2.3", "oo-smooth"}, {"3.1", "equivalence"}};
  if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
  if (kCheckGroups.count(name)) return name;
  throw InvalidInput("unknown check group: " + name);
}

json coefficients_json(const EhrhartPolynomial& e) {
  json out = json::array();
  for (const auto& c : e.coefficients()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      out.push_back(c.get_num().get_si());
    } else {
      out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    }
  }
  return out;
}

std::vector<PairingKind> parse_kinds(const std::string& text) {
  std::vector<PairingKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const PairingKind k = parse_pairing_kind(item);
    if (k != PairingKind::OO && k != PairingKind::OC && k != PairingKind::CC) {
      throw InvalidInput("--kinds accepts OO, OC and CC only");
    }
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  if (out.empty()) throw InvalidInput("--kinds is empty");
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

json split_json(const SplitProfile& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    const char* kind = b.kind == BlockKind::Interval ? "L" : b.kind == BlockKind::DelPezzo2 ? "V2" : "pseudo-V2";
    json coords = json::array();
    for (int c : b.coords) coords.push_back(c + 1);
    json jb{{"kind", kind}, {"coords", coords}};
    if (b.kind == BlockKind::PseudoDelPezzo2) jb["sign"] = b.sign;
    blocks.push_back(jb);
  }
  return {{"l", s.l}, {"m", s.m}, {"n", s.n}, {"blocks", blocks}, {"predicted_volume", predicted_volume(s)}};
}

json equivalence_json(const std::string& a, const LatticePolytope& pa, const std::string& b,
                      const LatticePolytope& pb, std::optional<bool>* verdict = nullptr) {
  json j{{"a", a}, {"b", b}};
  if (!is_fano(pa) || !is_fano(pb)) {
    j["equivalent"] = nullptr;
    j["reason"] = "not Fano";
    return j;
  }
  const auto u = unimodular_equivalent(pa, pb);
  j["equivalent"] = u.has_value();
  j["witness"] = u ? json(u->matrix()) : json(nullptr);
  if (verdict) *verdict = u.has_value();
  return j;
}

void mismatch(json& report, const std::string& what) { report["mismatches"].push_back(what); }

}  // namespace

json analyze(const Poset& p, const Poset& q, const AnalyzeOptions& options) {
  if (p.size() != q.size()) throw PreconditionError("P and Q must have the same size");
  const int d = p.size();
  const bool cle = has_common_linear_extension(p, q);
  auto has = [&](PairingKind k) {
    return std::find(options.kinds.begin(), options.kinds.end(), k) != options.kinds.end();
  };

  json report;
  report["input"] = {{"P", to_json(p)}, {"Q", to_json(q)}, {"d", d}};
  report["mismatches"] = json::array();

  // Single-poset polytopes.
  const auto order_p = order_polytope(p);
  const auto chain_p = chain_polytope(p);
  const auto mo = measure(order_p);
  const auto mc = measure(chain_p);
  const auto e_p = count_linear_extensions(p);
  report["polytopes"]["O(P)"] = to_json(mo);
  report["polytopes"]["O(P)"]["polytope"] = to_json(order_p);
  report["polytopes"]["C(P)"] = to_json(mc);
  report["polytopes"]["C(P)"]["polytope"] = to_json(chain_p);
  if (!(mo.ehrhart == mc.ehrhart)) mismatch(report, "stanley: i(O(P)) != i(C(P))");
  if (mo.volume != static_cast<std::int64_t>(e_p) || mc.volume != static_cast<std::int64_t>(e_p)) {
    mismatch(report, "stanley: normalized volume != e(P)");
  }

  std::map<PairingKind, LatticePolytope> gammas;
  std::map<PairingKind, GeometryResult> geo;
  for (PairingKind k : options.kinds) {
    gammas.emplace(k, gamma(k, p, q));
    geo.emplace(k, measure(gammas.at(k)));
    const std::string name = "Gamma_" + to_string(k);
    report["polytopes"][name] = to_json(geo.at(k));
    report["polytopes"][name]["polytope"] = to_json(gammas.at(k));
  }

  // Ehrhart and Gorenstein claims.
  if (has(PairingKind::OC) && has(PairingKind::CC) && !(geo.at(PairingKind::OC).ehrhart == geo.at(PairingKind::CC).ehrhart)) {
    mismatch(report, "ehrhart: i(Gamma_OC) != i(Gamma_CC)");
  }
  if (cle && has(PairingKind::OO)) {
    for (PairingKind k : {PairingKind::OC, PairingKind::CC}) {
      if (has(k) && !(geo.at(PairingKind::OO).ehrhart == geo.at(k).ehrhart)) {
        mismatch(report, "ehrhart: i(Gamma_OO) != i(Gamma_" + to_string(k) + ")");
      }
    }
  }
  for (PairingKind k : options.kinds) {
    const bool expected = k != PairingKind::OO || cle;
    if (geo.at(k).gorenstein != expected) mismatch(report, "gorenstein: Gamma_" + to_string(k));
  }

  // Smoothness criteria.
  json conditions;
  conditions["common_linear_extension"] = cle;
  conditions["linear_extensions"] = {{"P", e_p}, {"Q", count_linear_extensions(q)}};
  if (d >= 2) {
    const bool ccs = ccs_smooth_condition(p, q);
    const bool ocs = ocs_smooth_condition(p, q);
    conditions["ccs"] = ccs;
    conditions["ocs"] = ocs;
    conditions["oos"] = cle ? json(oos_smooth_condition(p, q)) : json(nullptr);
    auto check = [&](PairingKind k, bool predicate, const char* label) {
      if (!has(k)) return;
      const auto& g = geo.at(k);
      if (predicate != g.smooth || predicate != g.simplicial) mismatch(report, std::string(label) + ": condition vs geometry");
    };
    check(PairingKind::CC, ccs, "cc-smooth");
    check(PairingKind::OC, ocs, "oc-smooth");
    if (cle) check(PairingKind::OO, conditions["oos"].get<bool>(), "oo-smooth");
    if (ccs) {
      const auto profile = split_decompose(p, q);
      conditions["split"] = split_json(profile);
      if (has(PairingKind::CC)) {
        const auto& g = gammas.at(PairingKind::CC);
        if (!(split_polytope(profile) == g)) mismatch(report, "cc-smooth: split polytope != Gamma_CC");
        if (geo.at(PairingKind::CC).volume != predicted_volume(profile)) mismatch(report, "cc-smooth: volume != 2^l 5^m 6^n");
        const auto u = unimodular_equivalent(g, canonical_split(profile));
        conditions["split"]["canonical_witness"] = u ? json(u->matrix()) : json(nullptr);
        if (!u) mismatch(report, "cc-smooth: Gamma_CC not equivalent to the canonical split");
        if (profile.m == 0 && !geo.at(PairingKind::CC).centrally_symmetric) mismatch(report, "equivalence: m = 0 but not centrally symmetric");
        if (profile.m > 0 && !geo.at(PairingKind::CC).pseudo_symmetric) mismatch(report, "equivalence: m > 0 but not pseudo-symmetric");
      }
    } else {
      conditions["split"] = nullptr;
    }
  }
  report["conditions"] = conditions;

  // Unimodular equivalences.
  json eq = json::array();
  std::map<std::pair<PairingKind, PairingKind>, std::optional<bool>> verdicts;
  const std::vector<std::pair<PairingKind, PairingKind>> kind_pairs{
      {PairingKind::OO, PairingKind::CC}, {PairingKind::OO, PairingKind::OC}, {PairingKind::OC, PairingKind::CC}};
  for (const auto& [a, b] : kind_pairs) {
    if (!has(a) || !has(b)) continue;
    eq.push_back(equivalence_json("Gamma_" + to_string(a), gammas.at(a), "Gamma_" + to_string(b), gammas.at(b),
                                  &verdicts[{a, b}]));
  }
  std::optional<bool> swapped;
  std::optional<GeometryResult> swapped_geo;
  if (has(PairingKind::OC)) {
    const auto oc_swapped = gamma(PairingKind::OC, q, p);
    swapped_geo = measure(oc_swapped);
    eq.push_back(equivalence_json("Gamma_OC(P,Q)", gammas.at(PairingKind::OC), "Gamma_OC(Q,P)", oc_swapped, &swapped));
    if (has(PairingKind::CC) && !(geo.at(PairingKind::OC).ehrhart == measure(gamma(PairingKind::CC, q, p)).ehrhart)) {
      mismatch(report, "swap: i(Gamma_OC(P,Q)) != i(Gamma_CC(Q,P))");
    }
  }
  report["equivalences"] = eq;

  const bool all_smooth = options.kinds.size() == 3 &&
                          std::all_of(options.kinds.begin(), options.kinds.end(), [&](PairingKind k) { return geo.at(k).smooth; });
  if (d >= 3 && all_smooth) {
    if (verdicts[{PairingKind::OO, PairingKind::CC}] != true) mismatch(report, "equivalence: Gamma_OO not equivalent to Gamma_CC");
    if (verdicts[{PairingKind::OO, PairingKind::OC}] != false || verdicts[{PairingKind::OC, PairingKind::CC}] != false) {
      mismatch(report, "equivalence: Gamma_OC equivalent to Gamma_OO or Gamma_CC");
    }
    if (!(p == q) && (!swapped_geo->smooth || swapped != false)) {
      mismatch(report, "equivalence: Gamma_OC(Q,P) not smooth or equivalent to Gamma_OC(P,Q)");
    }
  }

  // Toric rings.
  if (options.toric) {
    std::map<PairingKind, ToricResult> toric;
    for (PairingKind k : options.kinds) {
      toric.emplace(k, measure_toric(k, p, q, options.degree_cap));
      const auto& t = toric.at(k);
      json jt = to_json(t);
      jt["degree_cap"] = options.degree_cap;
      jt["ehrhart_counts"] = geo.at(k).counts;
      jt["hilbert_matches_ehrhart"] = t.hilbert.empty() ? json(nullptr) : json(t.hilbert == geo.at(k).counts);
      report["toric"][to_string(k)] = jt;
      const std::string tag = "groebner: G_" + to_string(k);
      if (!t.buchberger.generators_in_ideal) mismatch(report, tag + " has a binomial outside the toric ideal");
      if (!t.initial_is_first) mismatch(report, tag + " initial monomial is not the first monomial");
      // G_OO is only claimed to be a Gröbner basis under a common linear extension.
      const bool claimed = k != PairingKind::OO || cle;
      if (claimed && !t.buchberger.passed()) mismatch(report, tag + " is not a Gröbner basis");
      if (t.buchberger.passed() && t.squarefree != true) mismatch(report, tag + " initial ideal not squarefree");
      if (!t.hilbert.empty() && t.hilbert != geo.at(k).counts) mismatch(report, tag + " Hilbert function != Ehrhart counts");
    }
    auto hilbert_of = [&](PairingKind k) { return toric.count(k) ? toric.at(k).hilbert : std::vector<std::uint64_t>{}; };
    if (has(PairingKind::OC) && has(PairingKind::CC) && hilbert_of(PairingKind::OC) != hilbert_of(PairingKind::CC)) {
      mismatch(report, "hilbert: R_OC and R_CC Hilbert functions differ");
    }
    if (cle && has(PairingKind::OO) && has(PairingKind::OC) && hilbert_of(PairingKind::OO) != hilbert_of(PairingKind::OC)) {
      mismatch(report, "hilbert: R_OO and R_OC Hilbert functions differ");
    }
  }
  return report;
}

namespace {

std::string yes_no(const json& v) {
  if (v.is_null()) return "-";
  return v.get<bool>() ? "yes" : "no";
}

void render_text(const json& r, std::ostream& out) {
  out << "d = " << r["input"]["d"].get<int>() << "\n";
  out << "P covers: " << r["input"]["P"]["covers"].dump() << "\n";
  out << "Q covers: " << r["input"]["Q"]["covers"].dump() << "\n\n";

  out << std::left << std::setw(12) << "polytope" << std::setw(8) << "verts" << std::setw(8) << "facets"
      << std::setw(8) << "vol" << std::setw(7) << "fano" << std::setw(7) << "gor" << std::setw(7) << "simp"
      << std::setw(8) << "smooth" << std::setw(7) << "csym" << std::setw(7) << "psym"
      << "ehrhart\n";
  for (const auto& [name, b] : r["polytopes"].items()) {
    out << std::left << std::setw(12) << name << std::setw(8) << b["polytope"]["vertices"].size() << std::setw(8)
        << b["polytope"]["facets"].size() << std::setw(8) << b["normalized_volume"].get<std::int64_t>()
        << std::setw(7) << yes_no(b["fano"]) << std::setw(7) << yes_no(b["gorenstein"]) << std::setw(7)
        << yes_no(b["simplicial"]) << std::setw(8) << yes_no(b["smooth"]) << std::setw(7)
        << yes_no(b["centrally_symmetric"]) << std::setw(7) << yes_no(b["pseudo_symmetric"])
        << b["ehrhart_text"].get<std::string>() << "\n";
  }

  const auto& c = r["conditions"];
  out << "\ncommon linear extension: " << yes_no(c["common_linear_extension"]) << "  e(P) = "
      << c["linear_extensions"]["P"] << "  e(Q) = " << c["linear_extensions"]["Q"] << "\n";
  if (c.contains("ccs")) {
    out << "CC condition: " << yes_no(c["ccs"]) << "  OC condition: " << yes_no(c["ocs"])
        << "  OO condition: " << yes_no(c["oos"]) << "\n";
  }
  if (c.contains("split") && !c["split"].is_null()) {
    out << "split (l, m, n) = (" << c["split"]["l"] << ", " << c["split"]["m"] << ", " << c["split"]["n"]
        << "), predicted volume " << c["split"]["predicted_volume"] << "\n";
  }

  out << "\nequivalences:\n";
  for (const auto& e : r["equivalences"]) {
    out << "  " << e["a"].get<std::string>() << " ~ " << e["b"].get<std::string>() << ": ";
    if (e["equivalent"].is_null()) {
      out << "n/a (" << e["reason"].get<std::string>() << ")\n";
    } else {
      out << yes_no(e["equivalent"]);
      if (!e["witness"].is_null()) out << "  U = " << e["witness"].dump();
      out << "\n";
    }
  }

  if (r.contains("toric")) {
    out << "\ntoric:\n";
    for (const auto& [kind, t] : r["toric"].items()) {
      out << "  " << kind << ": " << t["generators"] << " generators, groebner " << yes_no(t["groebner_basis"])
          << ", squarefree " << yes_no(t["squarefree"]) << ", hilbert " << t["hilbert"].dump() << ", ehrhart "
          << t["ehrhart_counts"].dump() << "\n";
    }
  }

  out << "\nmismatches: " << r["mismatches"].size() << "\n";
  for (const auto& m : r["mismatches"]) out << "  " << m.get<std::string>() << "\n";
}

}  // namespace

int cmd_analyze(const Poset& p, const Poset& q, const AnalyzeOptions& options, std::ostream& out) {
  const json report = analyze(p, q, options);
  if (options.format == Format::Json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out);
  }
  return report["mismatches"].empty() ? 0 : 1;
}

json ehrhart_report(const Poset& p, const Poset& q, PairingKind kind) {
  const auto e = ehrhart(gamma(kind, p, q));
  return {{"kind", to_string(kind)}, {"coefficients", coefficients_json(e)}, {"polynomial", e.to_string()}};
}

int cmd_ehrhart(const Poset& p, const Poset& q, PairingKind kind, Format format, std::ostream& out) {
  const json r = ehrhart_report(p, q, kind);
  if (format == Format::Json) {
    out << r.dump() << "\n";
  } else {
    out << r["polynomial"].get<std::string>() << "\n";
  }
  return 0;
}

}  // namespace posetpoly::cli
