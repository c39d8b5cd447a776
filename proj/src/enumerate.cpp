#include <string>

#include "tilab/errors.hpp"
#include "tilab/search.hpp"

namespace tilab {

void check_enumeration_order(int n, bool large) {
  if (n < kMinVertices) throw InvalidArgument("enumeration needs n >= 2");
  if (n > kLargeEnumerationCap) {
    throw CapExceeded("enumeration is limited to n <= " + std::to_string(kLargeEnumerationCap));
  }
  if (n > kEnumerationCap && !large) {
    throw CapExceeded("n = " + std::to_string(n) + " needs the large opt-in");
  }
}

std::uint64_t labeled_graph_count(int n) {
  check_enumeration_order(n, true);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                    bool large) {
  check_enumeration_order(n, large);
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Graph g = Graph::from_upper_triangle(n, code);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool large) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); }, large);
  return out;
}

}  // namespace tilab
