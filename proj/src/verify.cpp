#include "tilab/verify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "tilab/canonical.hpp"
#include "tilab/errors.hpp"
#include "tilab/search.hpp"

namespace tilab {
namespace {

using enum ClaimType;
using enum PrintedBound;

std::vector<ClaimInfo> build_catalog() {
  std::vector<ClaimInfo> out = {
      {"thm3.1", Extremality, std::nullopt, AtLeast, Direction::Decreasing},
      {"thm3.2", Extremality, std::nullopt, AtMost, Direction::Increasing},
  };
  struct Row {
    std::string_view thm;
    std::string_view cor;
    IndexKind kind;
    PrintedBound bound;
  };
  // The connective eccentricity lines print ">=" even though the index increases.
  static constexpr Row rows[] = {
      {"thm4.1", "cor4.1", IndexKind::Wiener, AtLeast},
      {"thm4.2", "cor4.2", IndexKind::Harary, AtMost},
      {"thm4.3", "cor4.3", IndexKind::ReciprocalDegreeDistance, AtMost},
      {"thm4.4", "cor4.4", IndexKind::EccentricityDistanceSum, AtLeast},
      {"thm4.5", "cor4.5", IndexKind::AdjacentEccentricDistanceSum, AtLeast},
      {"thm4.6", "cor4.6", IndexKind::ConnectiveEccentricity, AtLeast},
      {"thm4.7-m1", "cor4.7-m1", IndexKind::ZagrebM1, AtMost},
      {"thm4.7-m2", "cor4.7-m2", IndexKind::ZagrebM2, AtMost},
      {"thm4.7-pi1", "cor4.7-pi1", IndexKind::MultiplicativeZagrebPi1, AtMost},
      {"thm4.7-pi2", "cor4.7-pi2", IndexKind::MultiplicativeZagrebPi2, AtMost},
  };
  for (const Row& r : rows) out.push_back({r.thm, Theorem, r.kind, r.bound});
  for (const Row& r : rows) out.push_back({r.cor, Corollary, r.kind, r.bound});
  return out;
}

int rank(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return 0;
    case Verdict::RegimeFlagged: return 1;
    case Verdict::Refuted: return 2;
  }
  return 0;
}

void append_note(std::string& note, const std::string& more) {
  if (more.empty()) return;
  if (!note.empty()) note += "; ";
  note += more;
}

// Folds a finding into the tuple verdict; Refuted beats RegimeFlagged beats
// Confirmed, and the values of the strongest finding are kept.
void merge(TupleVerdict& into, Verdict v, std::optional<IndexValue> expected,
           std::optional<IndexValue> actual, const std::string& note) {
  if (rank(v) > rank(into.verdict)) {
    into.verdict = v;
    into.expected = std::move(expected);
    into.actual = std::move(actual);
  }
  append_note(into.note, note);
}

void partitions(int total, int parts, int min_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int s = min_part; s * parts <= total; ++s) {
    prefix.push_back(s);
    partitions(total - s, parts - 1, s, prefix, out);
    prefix.pop_back();
  }
}

std::set<CanonicalCode> join_family_codes(int n, int m, int k) {
  std::vector<std::vector<int>> all;
  std::vector<int> prefix;
  partitions(n - m, k, 1, prefix, all);
  std::set<CanonicalCode> codes;
  for (const auto& sizes : all) codes.insert(canonical_form(join_family_graph(m, sizes)));
  return codes;
}

Sense printed_sense(PrintedBound b) {
  return b == AtLeast ? Sense::Minimize : Sense::Maximize;
}

std::string scan_summary(const ExtremalReport& r) {
  std::string s = std::string(index_id(r.kind)) + " scan optimum " + r.optimum.to_string() +
                  " over " + std::to_string(r.optimizer_codes.size()) + " class(es)";
  if (!r.matches_construction) s += ", construction not the unique optimizer";
  return s;
}

// Scan-backed part of a theorem or corollary tuple.
void check_against_scan(TupleVerdict& tv, const ExtremalReport& r, const IndexValue& bound,
                        bool regime_restricted) {
  const bool value_ok = regime_restricted || r.optimum == bound;
  if (value_ok && r.matches_construction) return;
  merge(tv, Verdict::Refuted, bound, r.optimum, scan_summary(r));
}

void validate_grid(const ClaimInfo& info, const GridSpec& g) {
  if (g.n_min < kMinVertices || g.n_min > g.n_max) throw InvalidArgument("bad n range");
  if (g.k_min < 2 || g.k_min > g.k_max) throw InvalidArgument("bad k range");
  if (g.workers < 1) throw InvalidArgument("worker count must be at least 1");
  if (info.type == Extremality) {
    if (g.n_max > kEnumerationCap) {
      throw CapExceeded("extremality claims are scan-backed; n_max must be <= " +
                        std::to_string(kEnumerationCap));
    }
    return;
  }
  if (g.n_max > kConstructionCap) {
    throw CapExceeded("formula claims are limited to n <= " + std::to_string(kConstructionCap));
  }
  if (g.scan_n_max > kEnumerationCap) {
    throw CapExceeded("scan_n_max must be <= " + std::to_string(kEnumerationCap));
  }
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog = build_catalog();
  return catalog;
}

const ClaimInfo& find_claim(std::string_view id) {
  std::string lower(id);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const ClaimInfo& c : claim_catalog()) {
    if (c.id == lower) return c;
  }
  throw InvalidArgument("unknown claim id '" + std::string(id) + "'");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Refuted: return "Refuted";
    case Verdict::RegimeFlagged: return "RegimeFlagged";
  }
  return "?";
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(), [v](const TupleVerdict& t) { return t.verdict == v; }));
}

VerificationReport verify_theorem(std::string_view claim, const GridSpec& grid_in) {
  const ClaimInfo& info = find_claim(claim);
  GridSpec grid = grid_in;
  if (info.type == Corollary) grid.k_min = grid.k_max = 2;
  validate_grid(info, grid);

  VerificationReport report;
  report.claim = std::string(info.id);
  report.kind = info.kind;
  report.grid = grid;

  // Tuples grouped by (n, k) so each group needs one scan.
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (int k = grid.k_min; k <= grid.k_max; ++k) {
      for (int m = 1; m <= n - k; ++m) {
        if ((n - m) / k < grid.min_part_size) continue;
        groups[{n, k}].push_back(m);
      }
    }
  }

  std::vector<Objective> objectives;
  if (info.type == Extremality) {
    for (IndexKind kind : kAllIndexKinds) {
      if (direction(kind) == info.covers) objectives.push_back({kind, natural_sense(kind)});
    }
  } else {
    objectives.push_back({*info.kind, printed_sense(info.bound)});
  }
  const ScanOptions scan_options{grid.workers, false};

  for (const auto& [nk, ms] : groups) {
    const auto [n, k] = nk;
    const bool scanned = info.type == Extremality || n <= grid.scan_n_max;
    std::vector<ExtremalReport> scans;
    if (scanned) scans = scan_classes(n, k, ms, objectives, scan_options);

    for (std::size_t i = 0; i < ms.size(); ++i) {
      const ClassParams params{n, ms[i], k};
      TupleVerdict tv;
      tv.params = params;

      if (info.type == Extremality) {
        const std::set<CanonicalCode> family = join_family_codes(n, ms[i], k);
        for (std::size_t j = 0; j < objectives.size(); ++j) {
          const ExtremalReport& r = scans[i * objectives.size() + j];
          if (r.unique() && family.count(r.optimizer_codes.front())) continue;
          std::string why = std::string(index_id(r.kind)) + ": ";
          why += r.unique() ? "optimizer outside the join family"
                            : std::to_string(r.optimizer_codes.size()) + " optimizer classes";
          merge(tv, Verdict::Refuted, std::nullopt, r.optimum, why);
        }
        report.verdicts.push_back(std::move(tv));
        continue;
      }

      const IndexKind kind = *info.kind;
      const IndexValue oracle = evaluate(kind, extremal_graph(params));
      const ClosedForm theorem = closed_form(kind, params);
      ClosedForm printed = theorem;
      if (info.type == Corollary) {
        tv.parity = parity_of(n, ms[i]);
        printed = closed_form_bipartite(kind, n, ms[i], *tv.parity);
      }

      if (printed.value != oracle) {
        if (printed.regime_restricted) {
          merge(tv, Verdict::RegimeFlagged, printed.value, oracle,
                "singleton part vertex is universal");
        } else {
          merge(tv, Verdict::Refuted, printed.value, oracle,
                printed.erratum_suspect ? "printed line differs from construction (known erratum)"
                                        : "printed line differs from construction");
        }
      } else if (info.type == Corollary && printed.value != theorem.value) {
        if (theorem.erratum_suspect || theorem.regime_restricted) {
          append_note(tv.note, "theorem line flagged, corollary agrees with construction");
        } else {
          merge(tv, Verdict::Refuted, theorem.value, printed.value,
                "corollary disagrees with theorem line");
        }
      }

      if (scanned) check_against_scan(tv, scans[i], printed.value, printed.regime_restricted);
      report.verdicts.push_back(std::move(tv));
    }
  }
  return report;
}

}  // namespace tilab
