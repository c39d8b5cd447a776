#include <random>

#include "tilab/errors.hpp"
#include "tilab/graph6.hpp"
#include "tilab/search.hpp"

namespace tilab {

FuzzReport monotonicity_fuzz(IndexKind kind, std::uint64_t trials, int n_min, int n_max,
                             std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (n_min < kMinVertices || n_max > kMaxVertices || n_min > n_max) {
    throw InvalidArgument("bad order range for fuzzing");
  }
  // Every connected graph on 2 vertices is complete.
  if (n_max < 3) throw InvalidArgument("fuzzing needs n_max >= 3");
  FuzzReport report;
  report.kind = kind;
  report.trials = trials;
  report.n_min = n_min;
  report.n_max = n_max;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_order(n_min, n_max);
  const bool decreasing = direction(kind) == Direction::Decreasing;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Graph g = complete_graph(2);
    for (;;) {
      const int n = pick_order(rng);
      GraphBuilder b(n);
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (rng() & 1U) b.add_edge(u, v);
        }
      }
      g = b.build();
      if (!is_connected(g)) {
        ++report.rejected_disconnected;
        continue;
      }
      if (g.non_edges().empty()) {
        ++report.resampled_complete;
        continue;
      }
      break;
    }
    const std::vector<Edge> missing = g.non_edges();
    std::uniform_int_distribution<std::size_t> pick_edge(0, missing.size() - 1);
    const auto [u, v] = missing[pick_edge(rng)];

    const IndexValue before = evaluate(kind, g);
    const IndexValue after = evaluate(kind, g.with_edge(u, v));
    const bool ok = decreasing ? after < before : after > before;
    if (!ok) report.violations.push_back({to_graph6(g), u, v, before, after});
  }
  return report;
}

}  // namespace tilab
