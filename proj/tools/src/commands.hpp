#pragma once

// Subcommands of the posetpoly tool. Each writes its report to `out` and
// returns the process exit code (0 iff no mismatch and no error).

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetpoly/gamma.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly::cli {

enum class Format { Json, Text };

struct AnalyzeOptions {
  std::vector<PairingKind> kinds{PairingKind::OO, PairingKind::OC, PairingKind::CC};
  bool toric = true;
  int degree_cap = 4;
  Format format = Format::Json;
};

/// The full report; `mismatches` lists every violated invariant.
nlohmann::json analyze(const Poset& p, const Poset& q, const AnalyzeOptions& options);
int cmd_analyze(const Poset& p, const Poset& q, const AnalyzeOptions& options, std::ostream& out);

// Check groups selectable with --theorem.
inline const std::set<std::string> kCheckGroups{"ehrhart",   "groebner",  "hilbert",     "swap",
                                                "cc-smooth", "oc-smooth", "oo-smooth",   "equivalence",
                                                "gorenstein", "stanley"};

/// Accepts a group name or its numeric alias (1.1, 1.2, 1.4, 1.5, 2.1, 2.2,
/// 2.3, 3.1). Throws InvalidInput.
std::string canonical_check_group(const std::string& name);

struct SweepOptions {
  int d = 3;
  std::vector<PairingKind> kinds{PairingKind::OO, PairingKind::OC, PairingKind::CC};
  std::set<std::string> theorems;  // empty: all
  bool toric = true;               // only honoured for d <= 3
  int degree_cap = 4;
  int jobs = 1;
  std::size_t sample = 0;  // 0: every pair; otherwise an evenly strided subset
  double pair_timeout_seconds = 0;  // 0: unlimited
  Format format = Format::Json;
};

struct SweepSummary {
  std::size_t pairs = 0;
  std::size_t records = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
};

/// Streams one JSON line (or text row) per record, then a summary line.
SweepSummary run_sweep(const SweepOptions& options, std::ostream& out);
int cmd_sweep(const SweepOptions& options, std::ostream& out);

nlohmann::json ehrhart_report(const Poset& p, const Poset& q, PairingKind kind);
int cmd_ehrhart(const Poset& p, const Poset& q, PairingKind kind, Format format, std::ostream& out);

/// Integral coefficients as JSON numbers, others as "p/q" strings.
nlohmann::json coefficients_json(const EhrhartPolynomial& e);

std::vector<PairingKind> parse_kinds(const std::string& text);

}  // namespace posetpoly::cli
