#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include "commands.hpp"
#include "evaluate.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/fano.hpp"
#include "posetpoly/serialize.hpp"

namespace posetpoly::cli {

using nlohmann::json;

namespace {

struct SplitCheck {
  json profile;
  bool polytope_matches = false;
  bool volume_matches = false;
  bool equivalent_to_canonical = false;
  bool symmetry_matches = false;
};

struct PairData {
  bool cle = false;
  std::map<PairingKind, GeometryResult> geo;
  std::map<PairingKind, ToricResult> toric;
  bool ccs = false;
  bool ocs = false;
  std::optional<bool> oos;
  std::optional<SplitCheck> split;
  std::string error;
};

class Sweep {
 public:
  Sweep(const SweepOptions& options, std::ostream& out)
      : options_(options), out_(out), posets_(enumerate_posets(options.d)) {
    for (const auto& t : options.theorems) groups_.insert(canonical_check_group(t));
    use_toric_ = options.toric && options.d <= 3 && (wants("groebner") || wants("hilbert"));
  }

  SweepSummary run() {
    const std::size_t n = posets_.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
    if (options_.sample > 0 && options_.sample < pairs.size()) {
      std::vector<std::pair<std::size_t, std::size_t>> picked;
      for (std::size_t k = 0; k < options_.sample; ++k) picked.push_back(pairs[k * pairs.size() / options_.sample]);
      pairs = std::move(picked);
    }

    std::vector<PairData> data(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < pairs.size(); k = next++) {
        data[k] = evaluate(posets_[pairs[k].first], posets_[pairs[k].second]);
      }
    };
    const int jobs = std::max(1, options_.jobs);
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    for (std::size_t k = 0; k < pairs.size(); ++k) index_[pairs[k]] = k;

    SweepSummary summary;
    summary.pairs = pairs.size();
    if (wants("stanley")) {
      for (const auto& p : posets_) emit(stanley_record(p), summary);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      const PairData& pd = data[k];
      if (!pd.error.empty()) {
        ++summary.errors;
        emit({{"d", options_.d}, {"P", to_json(posets_[i])["covers"]}, {"Q", to_json(posets_[j])["covers"]},
              {"error", pd.error}, {"mismatches", json::array({"error"})}},
             summary);
        continue;
      }
      for (PairingKind kind : options_.kinds) emit(pair_record(i, j, pd, kind, data), summary);
    }

    const json tail{{"summary",
                     {{"d", options_.d},
                      {"pairs", summary.pairs},
                      {"records", summary.records},
                      {"mismatches", summary.mismatches},
                      {"errors", summary.errors}}}};
    if (options_.format == Format::Json) {
      out_ << tail.dump() << "\n";
    } else {
      out_ << "summary: d=" << options_.d << " pairs=" << summary.pairs << " records=" << summary.records
           << " mismatches=" << summary.mismatches << " errors=" << summary.errors << "\n";
    }
    return summary;
  }

 private:
  bool wants(const std::string& group) const { return groups_.empty() || groups_.count(group) > 0; }
  bool has(PairingKind k) const {
    return std::find(options_.kinds.begin(), options_.kinds.end(), k) != options_.kinds.end();
  }

  PairData evaluate(const Poset& p, const Poset& q) const {
    PairData pd;
    const auto start = std::chrono::steady_clock::now();
    try {
      pd.cle = has_common_linear_extension(p, q);
      for (PairingKind k : options_.kinds) {
        pd.geo.emplace(k, measure(gamma(k, p, q)));
        if (use_toric_) pd.toric.emplace(k, measure_toric(k, p, q, options_.degree_cap));
      }
      pd.ccs = ccs_smooth_condition(p, q);
      pd.ocs = ocs_smooth_condition(p, q);
      if (pd.cle) pd.oos = oos_smooth_condition(p, q);
      if (pd.ccs && has(PairingKind::CC) && wants("cc-smooth")) {
        const auto profile = split_decompose(p, q);
        const auto g = gamma(PairingKind::CC, p, q);
        const auto& geo = pd.geo.at(PairingKind::CC);
        SplitCheck s;
        s.profile = {{"l", profile.l}, {"m", profile.m}, {"n", profile.n}, {"predicted_volume", predicted_volume(profile)}};
        s.polytope_matches = split_polytope(profile) == g;
        s.volume_matches = geo.volume == predicted_volume(profile);
        s.equivalent_to_canonical = unimodular_equivalent(g, canonical_split(profile)).has_value();
        s.symmetry_matches = profile.m == 0 ? geo.centrally_symmetric : geo.pseudo_symmetric;
        pd.split = std::move(s);
      }
    } catch (const std::exception& e) {
      pd.error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pd.error.empty() && options_.pair_timeout_seconds > 0 && seconds > options_.pair_timeout_seconds) {
      pd.error = "budget exceeded";
    }
    return pd;
  }

  // Looks up a computed pair, or computes the single value needed.
  EhrhartPolynomial ehrhart_of(PairingKind kind, std::size_t i, std::size_t j,
                               const std::vector<PairData>& data) const {
    if (const auto it = index_.find({i, j}); it != index_.end()) {
      const auto& pd = data[it->second];
      if (pd.geo.count(kind)) return pd.geo.at(kind).ehrhart;
    }
    return ehrhart(gamma(kind, posets_[i], posets_[j]));
  }

  json pair_record(std::size_t i, std::size_t j, const PairData& pd, PairingKind kind,
                   const std::vector<PairData>& data) const {
    const Poset& p = posets_[i];
    const Poset& q = posets_[j];
    const auto& g = pd.geo.at(kind);
    json r{{"d", options_.d},
           {"P", to_json(p)["covers"]},
           {"Q", to_json(q)["covers"]},
           {"kind", to_string(kind)},
           {"common_linear_extension", pd.cle}};
    r.update(to_json(g));
    json checks = json::object();
    json mismatches = json::array();
    auto check = [&](const std::string& name, bool ok) {
      checks[name] = ok;
      if (!ok) mismatches.push_back(name);
    };

    if (wants("gorenstein")) check("gorenstein", g.gorenstein == (kind != PairingKind::OO || pd.cle));

    if (kind == PairingKind::OO) {
      r["condition"] = pd.oos ? json(*pd.oos) : json(nullptr);
      if (pd.cle && wants("ehrhart")) {
        bool ok = true;
        for (PairingKind k : {PairingKind::OC, PairingKind::CC}) {
          if (pd.geo.count(k)) ok = ok && pd.geo.at(k).ehrhart == g.ehrhart;
        }
        check("ehrhart", ok);
      }
      if (pd.cle && wants("oo-smooth")) check("oo-smooth", *pd.oos == g.smooth && *pd.oos == g.simplicial);
    } else if (kind == PairingKind::OC) {
      r["condition"] = pd.ocs;
      if (wants("ehrhart") && pd.geo.count(PairingKind::CC)) check("ehrhart", pd.geo.at(PairingKind::CC).ehrhart == g.ehrhart);
      if (wants("swap")) check("swap", ehrhart_of(PairingKind::CC, j, i, data) == g.ehrhart);
      if (wants("oc-smooth")) check("oc-smooth", pd.ocs == g.smooth && pd.ocs == g.simplicial);
      if (wants("equivalence") && options_.d >= 3 && all_smooth(pd)) check("equivalence", equivalence_claims(p, q));
    } else {
      r["condition"] = pd.ccs;
      if (wants("cc-smooth")) {
        bool ok = pd.ccs == g.smooth && pd.ccs == g.simplicial;
        if (pd.split) {
          const auto& s = *pd.split;
          r["split"] = s.profile;
          ok = ok && s.polytope_matches && s.volume_matches && s.equivalent_to_canonical && s.symmetry_matches;
        }
        check("cc-smooth", ok);
      }
    }

    if (pd.toric.count(kind)) {
      const auto& t = pd.toric.at(kind);
      r["toric"] = to_json(t);
      if (wants("groebner")) {
        const bool claimed = kind != PairingKind::OO || pd.cle;
        bool ok = t.buchberger.generators_in_ideal && t.initial_is_first;
        if (claimed) ok = ok && t.buchberger.passed();
        if (t.buchberger.passed()) ok = ok && t.squarefree == true && t.hilbert == g.counts;
        check("groebner", ok);
      }
      if (wants("hilbert")) {
        auto hilbert = [&](PairingKind k) { return pd.toric.count(k) ? pd.toric.at(k).hilbert : std::vector<std::uint64_t>{}; };
        if (kind == PairingKind::OC && pd.toric.count(PairingKind::CC)) check("hilbert", hilbert(PairingKind::OC) == hilbert(PairingKind::CC));
        if (kind == PairingKind::OO && pd.cle && pd.toric.count(PairingKind::OC)) check("hilbert", hilbert(PairingKind::OO) == hilbert(PairingKind::OC));
      }
    }
    r["checks"] = checks;
    r["mismatches"] = mismatches;
    return r;
  }

  bool all_smooth(const PairData& pd) const {
    if (pd.geo.size() != 3) return false;
    return std::all_of(pd.geo.begin(), pd.geo.end(), [](const auto& kv) { return kv.second.smooth; });
  }

  // Γ_OO ≅ Γ_CC, Γ_OC ≇ either, and for P != Q the swapped Γ_OC is smooth
  // and not equivalent.
  static bool equivalence_claims(const Poset& p, const Poset& q) {
    const auto oo = gamma(PairingKind::OO, p, q);
    const auto oc = gamma(PairingKind::OC, p, q);
    const auto cc = gamma(PairingKind::CC, p, q);
    if (!unimodular_equivalent(oo, cc)) return false;
    if (unimodular_equivalent(oc, oo) || unimodular_equivalent(oc, cc)) return false;
    if (p == q) return true;
    const auto swapped = gamma(PairingKind::OC, q, p);
    if (!is_fano(swapped) || !is_smooth(swapped)) return false;
    return !unimodular_equivalent(oc, swapped);
  }

  json stanley_record(const Poset& p) const {
    const auto o = measure(order_polytope(p));
    const auto c = measure(chain_polytope(p));
    const auto e = count_linear_extensions(p);
    const bool ok = o.ehrhart == c.ehrhart && o.volume == static_cast<std::int64_t>(e) &&
                    c.volume == static_cast<std::int64_t>(e);
    json r{{"d", options_.d},
           {"P", to_json(p)["covers"]},
           {"kind", "O/C"},
           {"ehrhart_O", coefficients_json(o.ehrhart)},
           {"ehrhart_C", coefficients_json(c.ehrhart)},
           {"volume_O", o.volume},
           {"volume_C", c.volume},
           {"linear_extensions", e},
           {"checks", {{"stanley", ok}}},
           {"mismatches", ok ? json::array() : json::array({"stanley"})}};
    return r;
  }

  void emit(const json& record, SweepSummary& summary) {
    ++summary.records;
    if (!record["mismatches"].empty()) ++summary.mismatches;
    if (options_.format == Format::Json) {
      out_ << record.dump() << "\n";
      return;
    }
    out_ << "d=" << options_.d << " P=" << record["P"].dump();
    if (record.contains("Q")) out_ << " Q=" << record["Q"].dump();
    if (record.contains("kind")) out_ << " " << record["kind"].get<std::string>();
    if (record.contains("ehrhart_text")) out_ << " [" << record["ehrhart_text"].get<std::string>() << "]";
    if (record.contains("error")) out_ << " error: " << record["error"].get<std::string>();
    out_ << (record["mismatches"].empty() ? " ok" : " MISMATCH " + record["mismatches"].dump()) << "\n";
  }

  const SweepOptions& options_;
  std::ostream& out_;
  std::vector<Poset> posets_;
  std::set<std::string> groups_;
  bool use_toric_ = false;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

}  // namespace

SweepSummary run_sweep(const SweepOptions& options, std::ostream& out) {
  if (options.d < 2 || options.d > 4) throw PreconditionError("sweep supports 2 <= d <= 4");
  if (options.kinds.empty()) throw PreconditionError("sweep needs at least one kind");
  Sweep sweep(options, out);
  return sweep.run();
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
  const auto summary = run_sweep(options, out);
  return summary.mismatches == 0 && summary.errors == 0 ? 0 : 1;
}

}  // namespace posetpoly::cli
