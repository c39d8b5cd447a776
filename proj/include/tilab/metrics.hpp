#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tilab/graph.hpp"

namespace tilab {

/// All-pairs hop distances of a connected graph together with the per-vertex
/// quantities the indices consume. Built once per graph and shared by every
/// evaluator.
class DistanceMetrics {
 public:
  int order() const noexcept { return n_; }

  int distance(int u, int v) const noexcept { return dist_[u * n_ + v]; }
  std::span<const std::uint8_t> row(int u) const noexcept {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

  /// D(u) = sum of distances from u.
  int transmission(int u) const noexcept { return transmission_[u]; }
  /// eps(u) = largest distance from u.
  int eccentricity(int u) const noexcept { return ecc_[u]; }
  int degree(int u) const noexcept { return degree_[u]; }

  std::span<const int> transmissions() const noexcept { return transmission_; }
  std::span<const int> eccentricities() const noexcept { return ecc_; }
  std::span<const int> degrees() const noexcept { return degree_; }

 private:
  friend DistanceMetrics compute_metrics(const Graph& g);

  int n_ = 0;
  std::vector<std::uint8_t> dist_;
  std::vector<int> transmission_;
  std::vector<int> ecc_;
  std::vector<int> degree_;
};

/// One bitset BFS per source. Throws DisconnectedGraph.
DistanceMetrics compute_metrics(const Graph& g);

}  // namespace tilab
