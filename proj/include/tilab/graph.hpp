#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tilab {

inline constexpr int kMinVertices = 2;
inline constexpr int kMaxVertices = 64;

/// Bit v set <=> vertex v is in the set.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (vertex_bit(n) - 1);
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on 2..64 vertices, one 64-bit neighbour row per
/// vertex. Immutable: every edit returns a new value.
class Graph {
 public:
  /// Builds from neighbour rows; validates symmetry and irreflexivity.
  Graph(int n, std::span<const VertexSet> rows);

  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Upper-triangle bit pattern in column-major order (0,1),(0,2),(1,2),(0,3)...
  /// with pair p at bit p. Requires n*(n-1)/2 <= 64.
  static Graph from_upper_triangle(int n, std::uint64_t code);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int u) const noexcept { return adj_[u]; }
  int degree(int u) const noexcept { return std::popcount(adj_[u]); }

  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  /// Inverse of from_upper_triangle.
  std::uint64_t upper_triangle() const;

  /// G + uv. Throws if uv is already an edge or u == v.
  Graph with_edge(int u, int v) const;

  /// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  friend class GraphBuilder;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Mutable staging area that produces a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  int order() const noexcept { return n_; }

  Graph build() const;

 private:
  void check_pair(int u, int v) const;

  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n-1}; vertex 0 is the centre.
Graph star_graph(int n);

Graph complement(const Graph& g);

/// Join g1 v g2: g1's vertices first, then g2's, plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);

/// Disjoint union, g1's vertices first.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// K_{s_1,...,s_k}, parts laid out consecutively in the given order.
Graph complete_multipartite(std::span<const int> sizes);

/// Subgraph induced by `vertices`, relabelled 0..|S|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet vertices);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// True iff a BFS from vertex 0 reaches every vertex.
bool is_connected(const Graph& g) noexcept;

/// Connectivity test restricted to `within`; empty or single-vertex sets count
/// as connected.
bool is_connected(const Graph& g, VertexSet within) noexcept;

}  // namespace tilab
