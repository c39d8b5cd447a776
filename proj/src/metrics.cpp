#include "tilab/metrics.hpp"

#include <bit>

#include "tilab/errors.hpp"

namespace tilab {

DistanceMetrics compute_metrics(const Graph& g) {
  const int n = g.order();
  const VertexSet everyone = all_vertices(n);

  DistanceMetrics m;
  m.n_ = n;
  m.dist_.assign(static_cast<std::size_t>(n) * n, 0);
  m.transmission_.assign(n, 0);
  m.ecc_.assign(n, 0);
  m.degree_ = g.degrees();

  for (int s = 0; s < n; ++s) {
    std::uint8_t* row = m.dist_.data() + static_cast<std::size_t>(s) * n;
    VertexSet seen = vertex_bit(s);
    VertexSet frontier = seen;
    int depth = 0;
    int total = 0;
    while (true) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) {
        next |= g.neighbors(std::countr_zero(f));
      }
      next &= ~seen;
      if (!next) break;
      ++depth;
      total += depth * std::popcount(next);
      for (VertexSet f = next; f; f &= f - 1) {
        row[std::countr_zero(f)] = static_cast<std::uint8_t>(depth);
      }
      seen |= next;
      frontier = next;
    }
    if (seen != everyone) throw DisconnectedGraph();
    m.transmission_[s] = total;
    m.ecc_[s] = depth;
  }
  return m;
}

}  // namespace tilab
