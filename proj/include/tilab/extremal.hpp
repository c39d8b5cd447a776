#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilab/graph.hpp"
#include "tilab/index_value.hpp"
#include "tilab/indices.hpp"
#include "tilab/partiteness.hpp"

namespace tilab {

/// Part sizes of a member of the join family K_m v (K̄_{s_1} v ... v K̄_{s_k}).
/// n - m = s*k + t with 0 <= t < k.
struct PartitionSpec {
  ClassParams params;
  std::vector<int> sizes;
  int s = 0;
  int t = 0;

  /// Every pair of part sizes differs by at most one.
  bool balanced() const;
};

/// (k - t) parts of size s followed by t parts of size s + 1.
PartitionSpec part_sizes(const ClassParams& params);

/// K_m joined with K_{sizes...}; clique vertices first, then parts in order.
Graph join_family_graph(int m, std::span<const int> sizes);

/// The balanced construction for the class.
Graph extremal_graph(const ClassParams& params);

/// A printed bound evaluated exactly, with the caveats that apply to it.
struct ClosedForm {
  IndexValue value;
  /// Eccentricity-based bound while some part has a single (universal) vertex;
  /// the printed expression assumes every part vertex has eccentricity 2.
  bool regime_restricted = false;
  /// The printed expression is a known erratum.
  bool erratum_suspect = false;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// The bound printed in the theorem for `kind`, at the balanced part sizes.
/// ZagrebM2 is always erratum_suspect (its cross-part term is missing).
ClosedForm closed_form(IndexKind kind, const ClassParams& params);

/// Index value of K_m v K_{sizes} from per-part expressions that account for
/// universal singleton parts and the cross-part Zagreb M2 term. Valid for any
/// part sizes (each >= 1) with m >= 1.
IndexValue join_family_value(IndexKind kind, int m, std::span<const int> sizes);

/// join_family_value at the balanced part sizes.
IndexValue closed_form_corrected(IndexKind kind, const ClassParams& params);

enum class Parity { Even, Odd };

/// The k = 2 corollary expression for the given parity of n - m. Throws
/// InvalidArgument on a parity mismatch. The odd adjacent-eccentric line (with
/// its "(n-m-11)" factor) is marked erratum_suspect.
ClosedForm closed_form_bipartite(IndexKind kind, int n, int m, Parity parity);

/// Parity of n - m.
Parity parity_of(int n, int m);

/// Moves one vertex from part `from` to part `to`. Requires
/// sizes[from] >= sizes[to] + 2.
std::vector<int> shift_vertex(std::span<const int> sizes, int from, int to);

/// Predicted TI(before) - TI(after shift).
struct DifferencePrediction {
  IndexKind kind;
  std::optional<IndexValue> exact;
  /// +1 for decreasing kinds, -1 for increasing kinds.
  int sign = 0;
  /// Eccentricity-based kind with a singleton receiving part: that vertex is
  /// universal before the shift, so the printed expression does not describe
  /// the pair and neither `exact` nor `sign` is a claim.
  bool regime_restricted = false;
};

/// Exact for Wiener, Harary, EccentricityDistanceSum, ConnectiveEccentricity
/// and ZagrebM1; sign-only otherwise. Requires n = m + sum(sizes).
DifferencePrediction predicted_difference(IndexKind kind, int n, int m,
                                          std::span<const int> sizes, int from, int to);

/// The difference expression printed for reciprocal degree distance,
/// -(6n - 2 - 3s_i - 3s_j)(s_i - s_j - 1). Kept to document that it disagrees
/// with direct computation.
IndexValue printed_rdd_difference(int n, int s_from, int s_to);

}  // namespace tilab
