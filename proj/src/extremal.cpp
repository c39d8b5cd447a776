#include "tilab/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tilab/errors.hpp"

namespace tilab {
namespace {

using Q = IndexValue;

Q frac(std::int64_t num, std::int64_t den) { return Q(BigInt(num), BigInt(den)); }

std::uint64_t to_exponent(const Q& v) {
  if (!v.is_integer() || v.sign() < 0) {
    throw std::logic_error("exponent is not a non-negative integer: " + v.to_string());
  }
  return v.numerator().convert_to<std::uint64_t>();
}

Q require_integer(IndexKind kind, Q v) {
  if (index_info(kind).integer_valued && !v.is_integer()) {
    throw std::logic_error(std::string(index_id(kind)) +
                           " closed form did not reduce to an integer: " + v.to_string());
  }
  return v;
}

int sum_of(std::span<const int> sizes) {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

Q theorem_value(IndexKind kind, const Q& n, const Q& m, const Q& k, const Q& s, const Q& t) {
  const Q two = 2;
  switch (kind) {
    case IndexKind::Wiener:
      return (n * n - m) / 2 + (n - m) * (s - 2) / 2 + t * (s + 1) / 2;
    case IndexKind::Harary:
      return (n * n - m) / 2 - (n - m) * (s + 1) / 4 - t * (s + 1) / 4;
    case IndexKind::ReciprocalDegreeDistance:
      return (two * n * n * n - n * n - Q(3) * m * n + two * m) / 2 -
             (n - m) * (Q(3) * n - s - 1) * s / 2 -
             t * (s + 1) * (Q(3) * n - two * s - 2) / 2;
    case IndexKind::EccentricityDistanceSum:
      return m * (n - 1) + two * t * (s + 1) * (n + s - 1) + two * (k - t) * s * (n + s - 2);
    case IndexKind::AdjacentEccentricDistanceSum:
      return m + two * t * (s + 1) * (n + s - 1) / (n - s - 1) +
             two * (k - t) * s * (n + s - 2) / (n - s);
    case IndexKind::ConnectiveEccentricity:
      return m * (n - 1) + t * (s + 1) * (n - s - 1) / 2 + (k - t) * s * (n - s) / 2;
    case IndexKind::ZagrebM1:
      return m * (n - 1) * (n - 1) + t * (s + 1) * (n - s - 1) * (n - s - 1) +
             (k - t) * s * (n - s) * (n - s);
    case IndexKind::ZagrebM2:
      return m * (m - 1) * (n - 1) * (n - 1) / 2 + m * (n - 1) * t * (s + 1) * (n - s - 1) +
             m * (n - 1) * (k - t) * s * (n - s);
    case IndexKind::MultiplicativeZagrebPi1:
      return power(n - 1, to_exponent(two * m)) *
             power(n - s, to_exponent(two * s * (k - t))) *
             power(n - s - 1, to_exponent(two * t * (s + 1)));
    case IndexKind::MultiplicativeZagrebPi2:
      return power(n - 1, to_exponent(m * (n - 1))) *
             power(n - s, to_exponent(s * (n - s) * (k - t))) *
             power(n - s - 1, to_exponent((s + 1) * (n - s - 1) * t));
  }
  throw InvalidArgument("unknown index kind");
}

Q corollary_value(IndexKind kind, const Q& n, const Q& m, bool even) {
  const Q nn = n * n;
  const Q mm = m * m;
  switch (kind) {
    case IndexKind::Wiener:
      return (Q(3) * nn + mm - Q(2) * m * n - Q(4) * n + Q(2) * m + (even ? 0 : 1)) / 4;
    case IndexKind::Harary:
      return (Q(3) * nn - mm + Q(2) * m * n - Q(2) * m - Q(2) * n - (even ? 0 : 1)) / 8;
    case IndexKind::ReciprocalDegreeDistance: {
      const Q common = Q(3) * nn * n - mm * m - Q(3) * mm * n + Q(9) * m * nn - Q(2) * nn +
                       Q(2) * mm - Q(16) * m * n;
      return even ? (common + Q(8) * m) / 8 : (common - Q(3) * n + Q(5) * m + 2) / 8;
    }
    case IndexKind::EccentricityDistanceSum:
      return Q(3) * nn - Q(4) * n - Q(3) * m * n + mm + Q(3) * m - (even ? 0 : 1);
    case IndexKind::AdjacentEccentricDistanceSum:
      if (even) return m + Q(2) * (n - m) * (Q(3) * n - m - 4) / (n + m);
      // Printed with the factor (n-m-11).
      return m + (n - m + 1) * (Q(3) * n - m - 3) / (n + m - 1) +
             (n - m - 11) * (Q(3) * n - m - 5) / (n + m + 1);
    case IndexKind::ConnectiveEccentricity:
      return m * (n - 1) + (nn - mm - (even ? 0 : 1)) / 4;
    case IndexKind::ZagrebM1:
      if (even) return m * (n - 1) * (n - 1) + (nn * n + nn * m - mm * n - mm * m) / 4;
      return m * (n - 1) * (n - 1) + (nn * n + nn * m - mm * n - n - mm * m - Q(3) * m) / 4;
    case IndexKind::ZagrebM2: {
      const Q head = m * (m - 1) * (n - 1) * (n - 1) / 2;
      if (even) return head + (nn - mm) * (nn + Q(8) * m * n - mm - Q(8) * m) / 16;
      const Q a = (n + m) * (n + m) - 1;
      const Q b = (n - m) * (n - m) - 1;
      return head + (a * b + Q(4) * m * (n - 1) * (Q(2) * nn - Q(2) * mm - 2)) / 16;
    }
    case IndexKind::MultiplicativeZagrebPi1:
      if (even) {
        return power(n - 1, to_exponent(Q(2) * m)) *
               power((n + m) / 2, to_exponent(Q(2) * (n - m)));
      }
      return power(n - 1, to_exponent(Q(2) * m)) *
             power((n + m + 1) / 2, to_exponent(n - m - 1)) *
             power((n + m - 1) / 2, to_exponent(n - m + 1));
    case IndexKind::MultiplicativeZagrebPi2:
      if (even) {
        return power(n - 1, to_exponent(m * (n - 1))) *
               power((n + m) / 2, to_exponent((nn - mm) / 2));
      }
      return power(n - 1, to_exponent(m * (n - 1))) *
             power((n + m - 1) / 2, to_exponent((nn - mm + Q(2) * m - 1) / 4)) *
             power((n + m + 1) / 2, to_exponent((nn - mm - Q(2) * m - 1) / 4));
  }
  throw InvalidArgument("unknown index kind");
}

void check_sizes(int m, std::span<const int> sizes) {
  if (m < 1) throw InvalidArgument("clique size m must be at least 1");
  if (sizes.empty()) throw InvalidArgument("no parts given");
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("part sizes must be positive");
  }
  if (m + sum_of(sizes) > kMaxVertices) throw InvalidArgument("order exceeds 64");
}

}  // namespace

bool PartitionSpec::balanced() const {
  if (sizes.empty()) return true;
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

PartitionSpec part_sizes(const ClassParams& params) {
  params.validate();
  PartitionSpec spec;
  spec.params = params;
  spec.s = (params.n - params.m) / params.k;
  spec.t = (params.n - params.m) % params.k;
  spec.sizes.assign(params.k - spec.t, spec.s);
  spec.sizes.insert(spec.sizes.end(), spec.t, spec.s + 1);
  return spec;
}

Graph join_family_graph(int m, std::span<const int> sizes) {
  check_sizes(m, sizes);
  const int n = m + sum_of(sizes);
  // part[v] = -1 for clique vertices.
  std::vector<int> part(n, -1);
  int v = m;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int j = 0; j < sizes[i]; ++j) part[v++] = static_cast<int>(i);
  }
  GraphBuilder b(n);
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (part[a] < 0 || part[a] != part[c]) b.add_edge(a, c);
    }
  }
  return b.build();
}

Graph extremal_graph(const ClassParams& params) {
  const PartitionSpec spec = part_sizes(params);
  return join_family_graph(params.m, spec.sizes);
}

ClosedForm closed_form(IndexKind kind, const ClassParams& params) {
  const PartitionSpec spec = part_sizes(params);
  ClosedForm out;
  out.value = require_integer(kind, theorem_value(kind, Q(params.n), Q(params.m), Q(params.k),
                                                  Q(spec.s), Q(spec.t)));
  out.regime_restricted = index_info(kind).eccentricity_based && spec.s == 1;
  out.erratum_suspect = kind == IndexKind::ZagrebM2;
  return out;
}

IndexValue join_family_value(IndexKind kind, int m, std::span<const int> sizes) {
  check_sizes(m, sizes);
  const std::int64_t n = m + sum_of(sizes);
  const std::int64_t pairs = n * (n - 1) / 2;
  // Clique vertices and singleton parts are universal.
  std::int64_t universal = m;
  for (int s : sizes) universal += (s == 1);

  auto for_parts = [&](auto&& term) {
    Q total = 0;
    for (int s : sizes) total += term(static_cast<std::int64_t>(s));
    return total;
  };

  switch (kind) {
    case IndexKind::Wiener:
      return Q(pairs) + for_parts([](std::int64_t s) { return Q(s * (s - 1) / 2); });
    case IndexKind::Harary:
      return Q(pairs) - for_parts([](std::int64_t s) { return frac(s * (s - 1) / 2, 2); });
    case IndexKind::ReciprocalDegreeDistance: {
      const Q degree_sum =
          Q(m * (n - 1)) + for_parts([&](std::int64_t s) { return Q(s * (n - s)); });
      return Q(n - 1) * degree_sum -
             for_parts([&](std::int64_t s) { return Q(s * (s - 1) / 2 * (n - s)); });
    }
    case IndexKind::EccentricityDistanceSum:
      return Q(universal * (n - 1)) + for_parts([&](std::int64_t s) {
               return s == 1 ? Q(0) : Q(s * 2 * (n + s - 2));
             });
    case IndexKind::ConnectiveEccentricity:
      return Q(universal * (n - 1)) + for_parts([&](std::int64_t s) {
               return s == 1 ? Q(0) : frac(s * (n - s), 2);
             });
    case IndexKind::AdjacentEccentricDistanceSum:
      return Q(universal) + for_parts([&](std::int64_t s) {
               return s == 1 ? Q(0) : frac(s * 2 * (n + s - 2), n - s);
             });
    case IndexKind::ZagrebM1:
      return Q(m * (n - 1) * (n - 1)) +
             for_parts([&](std::int64_t s) { return Q(s * (n - s) * (n - s)); });
    case IndexKind::ZagrebM2: {
      Q total = Q(static_cast<std::int64_t>(m) * (m - 1) / 2 * (n - 1) * (n - 1));
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::int64_t si = sizes[i];
        total += Q(m * si * (n - 1) * (n - si));
        for (std::size_t j = i + 1; j < sizes.size(); ++j) {
          const std::int64_t sj = sizes[j];
          total += Q(si * sj * (n - si) * (n - sj));
        }
      }
      return total;
    }
    case IndexKind::MultiplicativeZagrebPi1: {
      Q total = power(Q(n - 1), 2 * static_cast<std::uint64_t>(m));
      for (int s : sizes) total *= power(Q(n - s), 2 * static_cast<std::uint64_t>(s));
      return total;
    }
    case IndexKind::MultiplicativeZagrebPi2: {
      Q total = power(Q(n - 1), static_cast<std::uint64_t>(m) * (n - 1));
      for (int s : sizes) total *= power(Q(n - s), static_cast<std::uint64_t>(s) * (n - s));
      return total;
    }
  }
  throw InvalidArgument("unknown index kind");
}

IndexValue closed_form_corrected(IndexKind kind, const ClassParams& params) {
  const PartitionSpec spec = part_sizes(params);
  return join_family_value(kind, params.m, spec.sizes);
}

Parity parity_of(int n, int m) { return (n - m) % 2 == 0 ? Parity::Even : Parity::Odd; }

ClosedForm closed_form_bipartite(IndexKind kind, int n, int m, Parity parity) {
  const ClassParams params{n, m, 2};
  params.validate();
  if (parity_of(n, m) != parity) {
    throw InvalidArgument("parity does not match n - m = " + std::to_string(n - m));
  }
  const bool even = parity == Parity::Even;
  ClosedForm out;
  out.value = require_integer(kind, corollary_value(kind, Q(n), Q(m), even));
  out.regime_restricted = index_info(kind).eccentricity_based && (n - m) / 2 == 1;
  out.erratum_suspect = !even && kind == IndexKind::AdjacentEccentricDistanceSum;
  return out;
}

std::vector<int> shift_vertex(std::span<const int> sizes, int from, int to) {
  const int k = static_cast<int>(sizes.size());
  if (from < 0 || to < 0 || from >= k || to >= k || from == to) {
    throw InvalidArgument("part index out of range");
  }
  if (sizes[from] < sizes[to] + 2) {
    throw InvalidArgument("shift requires sizes[from] >= sizes[to] + 2");
  }
  std::vector<int> out(sizes.begin(), sizes.end());
  --out[from];
  ++out[to];
  return out;
}

DifferencePrediction predicted_difference(IndexKind kind, int n, int m,
                                          std::span<const int> sizes, int from, int to) {
  check_sizes(m, sizes);
  if (n != m + sum_of(sizes)) throw InvalidArgument("n must equal m + sum of part sizes");
  (void)shift_vertex(sizes, from, to);

  const std::int64_t si = sizes[from];
  const std::int64_t sj = sizes[to];
  const std::int64_t gap = si - sj - 1;

  DifferencePrediction out;
  out.kind = kind;
  out.sign = direction(kind) == Direction::Decreasing ? 1 : -1;
  out.regime_restricted = index_info(kind).eccentricity_based && sj == 1;
  switch (kind) {
    case IndexKind::Wiener: out.exact = Q(gap); break;
    case IndexKind::Harary: out.exact = frac(-gap, 2); break;
    case IndexKind::EccentricityDistanceSum: out.exact = Q(4 * gap); break;
    case IndexKind::ConnectiveEccentricity: out.exact = Q(-gap); break;
    case IndexKind::ZagrebM1: out.exact = Q(-gap * (4 * n - 3 * si - 3 * sj)); break;
    default: break;
  }
  return out;
}

IndexValue printed_rdd_difference(int n, int s_from, int s_to) {
  const std::int64_t gap = s_from - s_to - 1;
  return Q(-(6 * static_cast<std::int64_t>(n) - 2 - 3 * s_from - 3 * s_to) * gap);
}

}  // namespace tilab
