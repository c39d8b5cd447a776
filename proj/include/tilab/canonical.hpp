#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tilab/graph.hpp"

namespace tilab {

/// Up to this order the canonical search is guaranteed to finish and to
/// separate every pair of non-isomorphic graphs.
inline constexpr int kGuaranteedCanonicalOrder = 8;

/// Which search produced a code. Both searches minimise over the same set of
/// refinement-respecting orderings, so codes from either path are comparable;
/// the refined path is only budget-limited.
enum class CanonicalPath { Exhaustive, Refined };

/// Lexicographically smallest column-major upper-triangle bit string over all
/// vertex orderings that respect the degree-refinement cells. Stored as the
/// graph6 string of the relabelled graph; graph6 byte order matches bit order.
struct CanonicalCode {
  std::string graph6;
  CanonicalPath path = CanonicalPath::Exhaustive;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.graph6 == b.graph6;
  }
  friend std::strong_ordering operator<=>(const CanonicalCode& a,
                                          const CanonicalCode& b) {
    if (a.graph6.size() != b.graph6.size()) {
      return a.graph6.size() <=> b.graph6.size();
    }
    return a.graph6.compare(b.graph6) <=> 0;
  }
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// order[position] = original vertex placed at that position.
  std::vector<int> order;
};

/// Stable colour classes of iterated degree refinement, as colour ids that
/// depend only on the isomorphism class (smaller id = earlier cell).
std::vector<int> refine_degree_partition(const Graph& g);

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);

/// Same as canonical_form but throws CapExceeded above kGuaranteedCanonicalOrder.
CanonicalCode canonical_form_guaranteed(const Graph& g);

/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);

/// Degree-sequence rejection first, then canonical code comparison.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace tilab
