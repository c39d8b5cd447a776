#pragma once

#include <optional>

#include "tilab/graph.hpp"

namespace tilab {

/// Parameters of the class G(n, m, k): graphs on n vertices whose vertex
/// k-partiteness is at most m.
struct ClassParams {
  int n = 0;
  int m = 0;
  int k = 0;

  /// k >= 2, 1 <= m <= n - k, n <= 64. Throws InvalidArgument.
  void validate() const;
  bool valid() const noexcept;

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
  friend auto operator<=>(const ClassParams&, const ClassParams&) = default;
};

/// Proper k-colouring of the subgraph induced by `within` (empty parts allowed).
bool is_k_colorable(const Graph& g, VertexSet within, int k);

bool is_k_partite(const Graph& g, int k);

/// v_k(G): fewest deleted vertices leaving a k-partite graph. Requires k >= 2
/// and n >= k.
int vertex_k_partiteness(const Graph& g, int k);

/// v_k(G) if it is at most `bound`, otherwise nullopt. Stops searching once
/// deletion sets exceed the bound.
std::optional<int> vertex_k_partiteness_at_most(const Graph& g, int k, int bound);

/// |V(g)| == n and v_k(g) <= m.
bool in_class(const Graph& g, const ClassParams& params);

}  // namespace tilab
