#include "tilab/indices.hpp"

#include <string>
#include <vector>

#include "tilab/errors.hpp"

namespace tilab {
namespace {

constexpr std::array<IndexInfo, 10> kRegistry = {{
    {IndexKind::Wiener, "wiener", "W", Direction::Decreasing, false, false, true},
    {IndexKind::Harary, "harary", "H", Direction::Increasing, false, false, false},
    {IndexKind::ReciprocalDegreeDistance, "rdd", "RDD", Direction::Increasing, false, false, false},
    {IndexKind::EccentricityDistanceSum, "ecc-dist-sum", "xi_d", Direction::Decreasing, false, true, true},
    {IndexKind::ConnectiveEccentricity, "conn-ecc", "xi_ce", Direction::Increasing, false, true, false},
    {IndexKind::AdjacentEccentricDistanceSum, "adj-ecc-dist-sum", "xi_ad", Direction::Decreasing, false, true, false},
    {IndexKind::ZagrebM1, "m1", "M1", Direction::Increasing, true, false, true},
    {IndexKind::ZagrebM2, "m2", "M2", Direction::Increasing, true, false, true},
    {IndexKind::MultiplicativeZagrebPi1, "pi1", "Pi1", Direction::Increasing, true, false, true},
    {IndexKind::MultiplicativeZagrebPi2, "pi2", "Pi2", Direction::Increasing, true, false, true},
}};

// Sum of weight[d] / d over the distance (or degree, or eccentricity) classes.
IndexValue sum_over_classes(const std::vector<std::int64_t>& weight) {
  BigRational total = 0;
  for (std::size_t d = 1; d < weight.size(); ++d) {
    if (weight[d] != 0) total += BigRational(weight[d], static_cast<std::int64_t>(d));
  }
  return IndexValue(total);
}

// Product of d^(exponent_per_unit(d) * count(d)).
template <typename Exponent>
IndexValue degree_power_product(std::span<const int> degrees, Exponent exponent) {
  std::vector<std::uint64_t> count(kMaxVertices, 0);
  for (int d : degrees) ++count[d];
  BigInt product = 1;
  for (int d = 0; d < kMaxVertices; ++d) {
    if (count[d] == 0) continue;
    const std::uint64_t e = exponent(d) * count[d];
    if (e == 0) continue;
    product *= boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(e));
  }
  return IndexValue(product);
}

}  // namespace

const IndexInfo& index_info(IndexKind kind) {
  return kRegistry[static_cast<std::size_t>(kind)];
}

Direction direction(IndexKind kind) { return index_info(kind).direction; }

std::string_view index_id(IndexKind kind) { return index_info(kind).id; }

std::optional<IndexKind> parse_index_kind(std::string_view text) {
  for (const IndexInfo& info : kRegistry) {
    if (text == info.id || text == info.symbol) return info.kind;
  }
  return std::nullopt;
}

IndexValue wiener(const DistanceMetrics& m) {
  std::int64_t total = 0;
  for (int u = 0; u < m.order(); ++u) total += m.transmission(u);
  return IndexValue(total / 2);
}

IndexValue harary(const DistanceMetrics& m) {
  std::vector<std::int64_t> pairs(kMaxVertices, 0);
  for (int u = 0; u < m.order(); ++u) {
    for (int v = u + 1; v < m.order(); ++v) ++pairs[m.distance(u, v)];
  }
  return sum_over_classes(pairs);
}

IndexValue reciprocal_degree_distance(const DistanceMetrics& m) {
  std::vector<std::int64_t> weight(kMaxVertices, 0);
  for (int u = 0; u < m.order(); ++u) {
    for (int v = u + 1; v < m.order(); ++v) {
      weight[m.distance(u, v)] += m.degree(u) + m.degree(v);
    }
  }
  return sum_over_classes(weight);
}

IndexValue eccentricity_distance_sum(const DistanceMetrics& m) {
  std::int64_t total = 0;
  for (int u = 0; u < m.order(); ++u) {
    total += static_cast<std::int64_t>(m.eccentricity(u)) * m.transmission(u);
  }
  return IndexValue(total);
}

IndexValue connective_eccentricity(const DistanceMetrics& m) {
  std::vector<std::int64_t> by_ecc(kMaxVertices, 0);
  for (int u = 0; u < m.order(); ++u) by_ecc[m.eccentricity(u)] += m.degree(u);
  return sum_over_classes(by_ecc);
}

IndexValue adjacent_eccentric_distance_sum(const DistanceMetrics& m) {
  std::vector<std::int64_t> by_degree(kMaxVertices, 0);
  for (int u = 0; u < m.order(); ++u) {
    if (m.degree(u) == 0) throw DisconnectedGraph();
    by_degree[m.degree(u)] +=
        static_cast<std::int64_t>(m.eccentricity(u)) * m.transmission(u);
  }
  return sum_over_classes(by_degree);
}

IndexValue zagreb_m1(std::span<const int> degrees) {
  std::int64_t total = 0;
  for (int d : degrees) total += static_cast<std::int64_t>(d) * d;
  return IndexValue(total);
}

IndexValue zagreb_m1(const DistanceMetrics& m) { return zagreb_m1(m.degrees()); }

IndexValue zagreb_m2(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    std::int64_t neighbour_degrees = 0;
    for (VertexSet r = g.neighbors(u) & ~all_vertices(u + 1); r; r &= r - 1) {
      neighbour_degrees += g.degree(std::countr_zero(r));
    }
    total += g.degree(u) * neighbour_degrees;
  }
  return IndexValue(total);
}

IndexValue zagreb_m2(const Graph& g, const DistanceMetrics& m) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    std::int64_t neighbour_degrees = 0;
    for (VertexSet r = g.neighbors(u) & ~all_vertices(u + 1); r; r &= r - 1) {
      neighbour_degrees += m.degree(std::countr_zero(r));
    }
    total += m.degree(u) * neighbour_degrees;
  }
  return IndexValue(total);
}

IndexValue mult_zagreb_pi1(std::span<const int> degrees) {
  for (int d : degrees) {
    if (d == 0) return IndexValue(0);
  }
  return degree_power_product(degrees, [](int) { return std::uint64_t{2}; });
}

IndexValue mult_zagreb_pi1(const DistanceMetrics& m) { return mult_zagreb_pi1(m.degrees()); }

IndexValue mult_zagreb_pi2(std::span<const int> degrees) {
  return degree_power_product(degrees, [](int d) { return static_cast<std::uint64_t>(d); });
}

IndexValue mult_zagreb_pi2(const DistanceMetrics& m) { return mult_zagreb_pi2(m.degrees()); }

IndexValue evaluate(IndexKind kind, const Graph& g, const DistanceMetrics& m) {
  switch (kind) {
    case IndexKind::Wiener: return wiener(m);
    case IndexKind::Harary: return harary(m);
    case IndexKind::ReciprocalDegreeDistance: return reciprocal_degree_distance(m);
    case IndexKind::EccentricityDistanceSum: return eccentricity_distance_sum(m);
    case IndexKind::ConnectiveEccentricity: return connective_eccentricity(m);
    case IndexKind::AdjacentEccentricDistanceSum: return adjacent_eccentric_distance_sum(m);
    case IndexKind::ZagrebM1: return zagreb_m1(m);
    case IndexKind::ZagrebM2: return zagreb_m2(g, m);
    case IndexKind::MultiplicativeZagrebPi1: return mult_zagreb_pi1(m);
    case IndexKind::MultiplicativeZagrebPi2: return mult_zagreb_pi2(m);
  }
  throw InvalidArgument("unknown index kind");
}

IndexValue evaluate(IndexKind kind, const Graph& g) {
  if (index_info(kind).degree_only) {
    const std::vector<int> degrees = g.degrees();
    switch (kind) {
      case IndexKind::ZagrebM1: return zagreb_m1(degrees);
      case IndexKind::ZagrebM2: return zagreb_m2(g);
      case IndexKind::MultiplicativeZagrebPi1: return mult_zagreb_pi1(degrees);
      case IndexKind::MultiplicativeZagrebPi2: return mult_zagreb_pi2(degrees);
      default: break;
    }
  }
  return evaluate(kind, g, compute_metrics(g));
}

std::vector<IndexValue> evaluate_all(std::span<const IndexKind> kinds, const Graph& g) {
  bool need_metrics = false;
  for (IndexKind k : kinds) need_metrics |= !index_info(k).degree_only;
  std::vector<IndexValue> out;
  out.reserve(kinds.size());
  if (!need_metrics) {
    for (IndexKind k : kinds) out.push_back(evaluate(k, g));
    return out;
  }
  const DistanceMetrics m = compute_metrics(g);
  for (IndexKind k : kinds) out.push_back(evaluate(k, g, m));
  return out;
}

}  // namespace tilab
