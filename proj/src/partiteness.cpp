#include "tilab/partiteness.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tilab/errors.hpp"

namespace tilab {
namespace {

class Colorer {
 public:
  Colorer(const Graph& g, VertexSet within, int k) : g_(g), k_(k) {
    for (VertexSet r = within; r; r &= r - 1) order_[count_++] = std::countr_zero(r);
    // Highest degree inside the subgraph first.
    std::stable_sort(order_.begin(), order_.begin() + count_, [&](int a, int b) {
      return std::popcount(g.neighbors(a) & within) >
             std::popcount(g.neighbors(b) & within);
    });
  }

  bool run() {
    if (count_ <= k_) return true;
    return place(0, 0);
  }

 private:
  bool place(int i, int used) {
    if (i == count_) return true;
    const VertexSet nbrs = g_.neighbors(order_[i]);
    // A fresh colour is interchangeable with every other unused one.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & nbrs) continue;
      classes_[c] |= vertex_bit(order_[i]);
      if (place(i + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~vertex_bit(order_[i]);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int count_ = 0;
  std::array<int, kMaxVertices> order_{};
  std::array<VertexSet, kMaxVertices> classes_{};
};

}  // namespace

void ClassParams::validate() const {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (n < kMinVertices || n > kMaxVertices) {
    throw InvalidArgument("n must lie in [2, 64]");
  }
  if (m < 1 || m > n - k) {
    throw InvalidArgument("m must satisfy 1 <= m <= n - k (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
}

bool ClassParams::valid() const noexcept {
  return k >= 2 && n >= kMinVertices && n <= kMaxVertices && m >= 1 && m <= n - k;
}

bool is_k_colorable(const Graph& g, VertexSet within, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return Colorer(g, within, k).run();
}

bool is_k_partite(const Graph& g, int k) {
  return is_k_colorable(g, all_vertices(g.order()), k);
}

std::optional<int> vertex_k_partiteness_at_most(const Graph& g, int k, int bound) {
  const int n = g.order();
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (n < k) throw InvalidArgument("need at least k vertices");
  const VertexSet everyone = all_vertices(n);
  const int top = std::min(bound, n - k);
  for (int size = 0; size <= top; ++size) {
    if (size == 0) {
      if (is_k_colorable(g, everyone, k)) return 0;
      continue;
    }
    // Gosper's hack over all deletion sets of this size.
    VertexSet del = all_vertices(size);
    while (del <= everyone) {
      if (is_k_colorable(g, everyone & ~del, k)) return size;
      const VertexSet low = del & -del;
      const VertexSet ripple = del + low;
      if (ripple == 0) break;
      del = (((ripple ^ del) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

int vertex_k_partiteness(const Graph& g, int k) {
  // Any k vertices induce a k-partite graph, so n - k deletions always suffice.
  return *vertex_k_partiteness_at_most(g, k, g.order() - k);
}

bool in_class(const Graph& g, const ClassParams& params) {
  params.validate();
  if (g.order() != params.n) return false;
  return vertex_k_partiteness_at_most(g, params.k, params.m).has_value();
}

}  // namespace tilab
