#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "tilab/graph.hpp"
#include "tilab/index_value.hpp"
#include "tilab/metrics.hpp"

namespace tilab {

enum class IndexKind {
  Wiener,
  Harary,
  ReciprocalDegreeDistance,
  EccentricityDistanceSum,
  ConnectiveEccentricity,
  AdjacentEccentricDistanceSum,
  ZagrebM1,
  ZagrebM2,
  MultiplicativeZagrebPi1,
  MultiplicativeZagrebPi2,
};

/// Effect of adding one edge to a connected graph.
enum class Direction { Decreasing, Increasing };

struct IndexInfo {
  IndexKind kind;
  std::string_view id;      // command-line identifier
  std::string_view symbol;  // short label used in reports
  Direction direction;
  bool degree_only;         // no distances needed
  bool eccentricity_based;  // depends on eps(u)
  bool integer_valued;
};

inline constexpr std::array<IndexKind, 10> kAllIndexKinds = {
    IndexKind::Wiener,
    IndexKind::Harary,
    IndexKind::ReciprocalDegreeDistance,
    IndexKind::EccentricityDistanceSum,
    IndexKind::ConnectiveEccentricity,
    IndexKind::AdjacentEccentricDistanceSum,
    IndexKind::ZagrebM1,
    IndexKind::ZagrebM2,
    IndexKind::MultiplicativeZagrebPi1,
    IndexKind::MultiplicativeZagrebPi2,
};

const IndexInfo& index_info(IndexKind kind);
Direction direction(IndexKind kind);
std::string_view index_id(IndexKind kind);

/// Accepts the command-line id ("wiener", "m2", ...) or the report symbol.
std::optional<IndexKind> parse_index_kind(std::string_view text);

// Distance-based evaluators. Metrics must come from a connected graph.
IndexValue wiener(const DistanceMetrics& m);
IndexValue harary(const DistanceMetrics& m);
IndexValue reciprocal_degree_distance(const DistanceMetrics& m);
/// Vertex form: sum of eps(u) * D(u).
IndexValue eccentricity_distance_sum(const DistanceMetrics& m);
IndexValue connective_eccentricity(const DistanceMetrics& m);
IndexValue adjacent_eccentric_distance_sum(const DistanceMetrics& m);

// Degree-based evaluators.
IndexValue zagreb_m1(std::span<const int> degrees);
IndexValue zagreb_m1(const DistanceMetrics& m);
IndexValue zagreb_m2(const Graph& g);
IndexValue zagreb_m2(const Graph& g, const DistanceMetrics& m);
/// Product of d(u)^2; zero when a vertex is isolated.
IndexValue mult_zagreb_pi1(std::span<const int> degrees);
IndexValue mult_zagreb_pi1(const DistanceMetrics& m);
/// Product of d(u)^d(u) with 0^0 = 1.
IndexValue mult_zagreb_pi2(std::span<const int> degrees);
IndexValue mult_zagreb_pi2(const DistanceMetrics& m);

/// Evaluates `kind` on metrics already computed for g.
IndexValue evaluate(IndexKind kind, const Graph& g, const DistanceMetrics& m);

/// Dispatcher. Degree-only kinds accept disconnected graphs; the others throw
/// DisconnectedGraph.
IndexValue evaluate(IndexKind kind, const Graph& g);

/// Evaluates several kinds with a single metrics computation.
std::vector<IndexValue> evaluate_all(std::span<const IndexKind> kinds, const Graph& g);

}  // namespace tilab
