#include "tilab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "tilab/errors.hpp"
#include "tilab/graph6.hpp"

namespace tilab {
namespace {

// Search nodes allowed on the refined path before giving up.
constexpr std::uint64_t kRefinedNodeBudget = 20'000'000;

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> colors, bool budgeted)
      : g_(g), n_(g.order()), budgeted_(budgeted) {
    std::vector<int> vertices(n_);
    for (int v = 0; v < n_; ++v) vertices[v] = v;
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    cell_at_.resize(n_);
    for (int p = 0; p < n_; ++p) cell_at_[p] = colors[vertices[p]];
    colors_ = std::move(colors);
    order_.resize(n_);
    columns_.resize(n_);
  }

  std::vector<int> run() {
    descend(0, 0, false);
    return best_order_;
  }

 private:
  // Column p holds the bits (i, p) for i < p, with i = 0 most significant.
  VertexSet column(int p, int v) const {
    VertexSet col = 0;
    for (int i = 0; i < p; ++i) {
      col = (col << 1) | (g_.has_edge(order_[i], v) ? 1 : 0);
    }
    return col;
  }

  // Returns true when the best leaf was replaced inside this subtree; the new
  // best then shares the current prefix, so later siblings compare against it.
  bool descend(int p, VertexSet used, bool already_smaller) {
    if (budgeted_ && ++nodes_ > kRefinedNodeBudget) {
      throw CapExceeded("canonical search budget exhausted at order " +
                        std::to_string(n_));
    }
    if (p == n_) {
      if (already_smaller || best_order_.empty()) {
        best_order_ = order_;
        best_columns_ = columns_;
        return true;
      }
      return false;
    }
    bool updated = false;
    for (int v = 0; v < n_; ++v) {
      if ((used & vertex_bit(v)) || colors_[v] != cell_at_[p]) continue;
      order_[p] = v;
      const VertexSet col = column(p, v);
      bool smaller = already_smaller || best_order_.empty();
      if (!smaller) {
        if (col > best_columns_[p]) continue;
        smaller = col < best_columns_[p];
      }
      columns_[p] = col;
      if (descend(p + 1, used | vertex_bit(v), smaller)) {
        updated = true;
        already_smaller = false;
      }
    }
    return updated;
  }

  const Graph& g_;
  int n_;
  bool budgeted_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors_;
  std::vector<int> cell_at_;
  std::vector<int> order_;
  std::vector<VertexSet> columns_;
  std::vector<int> best_order_;
  std::vector<VertexSet> best_columns_;
};

}  // namespace

std::vector<int> refine_degree_partition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colors = g.degrees();
  // Compress degrees to dense ranks.
  {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : colors) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                           sorted.begin());
    }
  }
  int classes = *std::max_element(colors.begin(), colors.end()) + 1;
  while (true) {
    std::map<std::vector<int>, int> rank;
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int>& sig = signature[v];
      sig.push_back(colors[v]);
      std::vector<int> around;
      for (VertexSet r = g.neighbors(v); r; r &= r - 1) {
        around.push_back(colors[std::countr_zero(r)]);
      }
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      rank.emplace(sig, 0);
    }
    int next = 0;
    for (auto& [sig, id] : rank) id = next++;
    for (int v = 0; v < n; ++v) colors[v] = rank.at(signature[v]);
    if (next == classes) break;
    classes = next;
  }
  return colors;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const bool exhaustive = g.order() <= kGuaranteedCanonicalOrder;
  CanonicalSearch search(g, refine_degree_partition(g), !exhaustive);
  CanonicalLabeling out;
  out.order = search.run();
  std::vector<int> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[out.order[p]] = p;
  out.code.graph6 = to_graph6(g.permuted(perm));
  out.code.path = exhaustive ? CanonicalPath::Exhaustive : CanonicalPath::Refined;
  return out;
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

CanonicalCode canonical_form_guaranteed(const Graph& g) {
  if (g.order() > kGuaranteedCanonicalOrder) {
    throw CapExceeded("guaranteed canonical form limited to order " +
                      std::to_string(kGuaranteedCanonicalOrder));
  }
  return canonical_form(g);
}

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[lab.order[p]] = p;
  return g.permuted(perm);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da = a.degrees();
  std::vector<int> db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tilab
