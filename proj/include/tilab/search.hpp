#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "tilab/canonical.hpp"
#include "tilab/extremal.hpp"
#include "tilab/graph.hpp"
#include "tilab/index_value.hpp"
#include "tilab/indices.hpp"
#include "tilab/partiteness.hpp"

namespace tilab {

/// Largest order enumerated without the `large` opt-in.
inline constexpr int kEnumerationCap = 7;
inline constexpr int kLargeEnumerationCap = 8;

/// Throws CapExceeded (or InvalidArgument below 2) when n cannot be enumerated.
void check_enumeration_order(int n, bool large);

/// 2^{C(n,2)}.
std::uint64_t labeled_graph_count(int n);

/// Every labeled graph on n vertices in upper-triangle code order.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                    bool large = false);

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool large = false);

struct CorpusError {
  std::size_t line = 0;
  std::string message;
};

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<CorpusError> errors;
};

/// One graph6 string per line; blank lines are skipped. Under `strict` the
/// first malformed line throws ParseError carrying its line number.
Corpus load_graph6_corpus(std::istream& in, bool strict);

enum class Sense { Minimize, Maximize };

/// Minimize for decreasing kinds, Maximize for increasing ones.
Sense natural_sense(IndexKind kind);

struct Objective {
  IndexKind kind;
  Sense sense;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct ScanOptions {
  int workers = 1;
  bool large = false;
};

struct ExtremalReport {
  ClassParams params;
  IndexKind kind = IndexKind::Wiener;
  Sense sense = Sense::Minimize;
  IndexValue optimum;
  /// Sorted, one entry per isomorphism class.
  std::vector<CanonicalCode> optimizer_codes;
  /// Connected class members seen.
  std::uint64_t class_size = 0;
  /// Members attaining the optimum, counted before isomorphism dedup.
  std::uint64_t optimizer_count = 0;
  bool matches_construction = false;
  bool matches_closed_form = false;
  ClosedForm closed_form;
  /// evaluate(kind, extremal_graph(params)).
  IndexValue construction_value;

  bool unique() const { return optimizer_codes.size() == 1; }

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

/// Exhaustive scan of the connected members of G(n, m, k) in the kind's
/// natural sense.
ExtremalReport scan_class(const ClassParams& params, IndexKind kind,
                          const ScanOptions& options = {});

/// One pass over the labeled graphs on n vertices serving several m values and
/// objectives. Result order: for each m (as given), for each objective.
std::vector<ExtremalReport> scan_classes(int n, int k, std::span<const int> ms,
                                         std::span<const Objective> objectives,
                                         const ScanOptions& options = {});

/// Same reduction over an explicit list of graphs (e.g. a non-isomorphic
/// corpus). Graphs of another order or disconnected ones are skipped.
std::vector<ExtremalReport> scan_corpus(std::span<const Graph> graphs, int n, int k,
                                        std::span<const int> ms,
                                        std::span<const Objective> objectives);

struct FuzzViolation {
  std::string graph6;
  int u = 0;
  int v = 0;
  IndexValue before;
  IndexValue after;
};

struct FuzzReport {
  IndexKind kind = IndexKind::Wiener;
  std::uint64_t trials = 0;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  /// Samples rejected for being disconnected.
  std::uint64_t rejected_disconnected = 0;
  /// Samples that were complete (no non-edge) and were drawn again.
  std::uint64_t resampled_complete = 0;
  std::vector<FuzzViolation> violations;
};

/// Adds a random non-edge to random connected graphs (edge probability 1/2,
/// rejection until connected) and checks the strict change of direction(kind).
FuzzReport monotonicity_fuzz(IndexKind kind, std::uint64_t trials, int n_min, int n_max,
                             std::uint64_t seed);

}  // namespace tilab
