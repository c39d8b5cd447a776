#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tilab/errors.hpp"
#include "tilab/extremal.hpp"
#include "tilab/partiteness.hpp"

using namespace tilab;

TEST_CASE("colourability examples") {
  CHECK_FALSE(is_k_partite(cycle_graph(5), 2));
  const int k33[] = {3, 3};
  CHECK(is_k_partite(complete_multipartite(k33), 2));
  CHECK_FALSE(is_k_partite(complete_graph(4), 3));
  CHECK(is_k_partite(complete_graph(4), 4));
  CHECK(is_k_partite(empty_graph(4), 1));
  CHECK_THROWS_AS(is_k_partite(complete_graph(3), 0), InvalidArgument);
}

TEST_CASE("vertex k-partiteness examples") {
  CHECK(vertex_k_partiteness(cycle_graph(5), 2) == 1);
  CHECK(vertex_k_partiteness(complete_graph(4), 2) == 2);
  CHECK(vertex_k_partiteness(complete_graph(5), 3) == 2);
  CHECK_THROWS_AS(vertex_k_partiteness(complete_graph(3), 1), InvalidArgument);
  CHECK_THROWS_AS(vertex_k_partiteness(complete_graph(3), 4), InvalidArgument);
  CHECK(vertex_k_partiteness_at_most(complete_graph(6), 2, 3) == std::nullopt);
  CHECK(vertex_k_partiteness_at_most(complete_graph(6), 2, 4) == 4);
}

TEST_CASE("class parameters and membership") {
  CHECK_THROWS_AS((ClassParams{6, 0, 2}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ClassParams{6, 5, 2}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ClassParams{6, 1, 1}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ClassParams{65, 1, 2}.validate()), InvalidArgument);
  CHECK((ClassParams{6, 4, 2}.valid()));

  const int k222[] = {2, 2, 2};
  CHECK(in_class(complete_multipartite(k222), {6, 1, 3}));
  CHECK_FALSE(in_class(complete_graph(6), {6, 1, 2}));
  const int k22[] = {2, 2};
  CHECK(in_class(join_family_graph(2, k22), {6, 2, 2}));
  CHECK_FALSE(in_class(complete_graph(5), {6, 4, 2}));
}

TEST_CASE("agrees with brute force") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + i % 6;
    const Graph g = oracle::random_graph(rng, n, 0.3 + (i % 3) * 0.2);
    for (int k = 2; k <= std::min(n, 4); ++k) {
      CAPTURE(k);
      const int vk = vertex_k_partiteness(g, k);
      CHECK(vk == oracle::vertex_k_partiteness(g, k));
      CHECK((vk == 0) == is_k_partite(g, k));
      CHECK(vk <= n - k);
      if (k + 1 <= n) CHECK(vertex_k_partiteness(g, k + 1) <= vk);
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      CHECK(is_k_partite(g, k) == oracle::colorable(oracle::adjacency(g), all, k));
    }
  }
}

TEST_CASE("restriction never raises the parameter") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 200; ++i) {
    const int n = 5 + i % 4;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    VertexSet keep = rng() & all_vertices(n);
    if (std::popcount(keep) < 3) continue;
    const Graph h = induced_subgraph(g, keep);
    CHECK(vertex_k_partiteness(h, 2) <= vertex_k_partiteness(g, 2));
    CHECK(vertex_k_partiteness(h, 3) <= vertex_k_partiteness(g, 3));
  }
}

TEST_CASE("the construction has v_k = m") {
  for (int n = 4; n <= 12; ++n) {
    for (int k = 2; k <= 4; ++k) {
      for (int m = 1; m <= n - k; ++m) {
        const ClassParams params{n, m, k};
        CAPTURE(n); CAPTURE(m); CAPTURE(k);
        CHECK(vertex_k_partiteness(extremal_graph(params), k) == m);
      }
    }
  }
}
