#include "tilab/graph.hpp"

#include <numeric>
#include <string>

#include "tilab/errors.hpp"

namespace tilab {
namespace {

void check_order(int n) {
  if (n < kMinVertices || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) +
                          " outside [2, 64]");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) {
    throw InvalidArgument("expected one neighbour row per vertex");
  }
  n_ = n;
  const VertexSet mask = all_vertices(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~mask) throw InvalidArgument("neighbour outside vertex range");
    if (rows[u] & vertex_bit(u)) throw InvalidArgument("self-loop");
    adj_[u] = rows[u];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (has_edge(u, v) != has_edge(v, u)) {
        throw InvalidArgument("adjacency is not symmetric");
      }
    }
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_upper_triangle(int n, std::uint64_t code) {
  check_order(n);
  if (n * (n - 1) / 2 > 64) {
    throw InvalidArgument("upper-triangle code holds at most 11 vertices");
  }
  Graph g;
  g.n_ = n;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((code >> bit) & 1U) {
        g.adj_[i] |= vertex_bit(j);
        g.adj_[j] |= vertex_bit(i);
      }
    }
  }
  return g;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int u = 0; u < n_; ++u) out[u] = degree(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::upper_triangle() const {
  if (n_ * (n_ - 1) / 2 > 64) {
    throw InvalidArgument("upper-triangle code holds at most 11 vertices");
  }
  std::uint64_t code = 0;
  int bit = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (has_edge(i, j)) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidArgument("invalid vertex pair");
  }
  if (has_edge(u, v)) throw InvalidArgument("edge already present");
  Graph g = *this;
  g.adj_[u] |= vertex_bit(v);
  g.adj_[v] |= vertex_bit(u);
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InvalidArgument("permutation length mismatch");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || (seen & vertex_bit(p))) {
      throw InvalidArgument("not a permutation");
    }
    seen |= vertex_bit(p);
  }
  Graph g;
  g.n_ = n_;
  for (int u = 0; u < n_; ++u) {
    VertexSet row = adj_[u];
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      g.adj_[perm[u]] |= vertex_bit(perm[v]);
    }
  }
  return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n) { check_order(n); }

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.order()), adj_(g.adj_) {}

void GraphBuilder::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidArgument("vertex out of range");
  }
  if (u == v) throw InvalidArgument("self-loop");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= vertex_bit(v);
  adj_[v] |= vertex_bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~vertex_bit(v);
  adj_[v] &= ~vertex_bit(u);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  return g;
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

Graph star_graph(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet mask = all_vertices(n);
  std::vector<VertexSet> rows(n);
  for (int u = 0; u < n; ++u) rows[u] = ~g.neighbors(u) & mask & ~vertex_bit(u);
  return Graph(n, rows);
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxVertices) {
    throw InvalidArgument("combined order exceeds 64 vertices");
  }
  const int n = n1 + n2;
  const VertexSet first = all_vertices(n1);
  const VertexSet second = all_vertices(n) & ~first;
  std::vector<VertexSet> rows(n);
  for (int u = 0; u < n1; ++u) rows[u] = g1.neighbors(u) | (cross ? second : 0);
  for (int u = 0; u < n2; ++u) {
    rows[n1 + u] = (g2.neighbors(u) << n1) | (cross ? first : 0);
  }
  return Graph(n, rows);
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return combine(g1, g2, false);
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw InvalidArgument("no parts given");
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("part sizes must be positive");
    n += s;
    if (n > kMaxVertices) throw InvalidArgument("total order exceeds 64");
  }
  check_order(n);
  std::vector<VertexSet> rows(n);
  const VertexSet everyone = all_vertices(n);
  int offset = 0;
  for (int s : sizes) {
    const VertexSet part = all_vertices(s) << offset;
    for (int u = offset; u < offset + s; ++u) rows[u] = everyone & ~part;
    offset += s;
  }
  return Graph(n, rows);
}

Graph induced_subgraph(const Graph& g, VertexSet vertices) {
  const int n = g.order();
  if (vertices & ~all_vertices(n)) throw InvalidArgument("vertex out of range");
  std::vector<int> list;
  for (VertexSet rest = vertices; rest; rest &= rest - 1) {
    list.push_back(std::countr_zero(rest));
  }
  const int m = static_cast<int>(list.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.has_edge(list[i], list[j])) b.add_edge(i, j);
    }
  }
  return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexSet set = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex out of range");
    set |= vertex_bit(v);
  }
  return induced_subgraph(g, set);
}

bool is_connected(const Graph& g, VertexSet within) noexcept {
  if (std::popcount(within) <= 1) return true;
  VertexSet seen = vertex_bit(std::countr_zero(within));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen == within;
}

bool is_connected(const Graph& g) noexcept {
  return is_connected(g, all_vertices(g.order()));
}

}  // namespace tilab
