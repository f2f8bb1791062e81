#include <doctest.h>

#include "gcx/brute.hpp"
#include "gcx/connectivity.hpp"
#include "gcx/corpus.hpp"
#include "helpers.hpp"

using namespace gcx;

TEST_CASE("k-connectivity on the stated examples") {
  CHECK(is_k_connected(complete_graph(5), 4));
  CHECK_FALSE(is_k_connected(complete_graph(5), 5));  // needs more than k vertices

  const Graph petersen = kneser_graph(5, 2);
  CHECK(is_k_connected(petersen, 3));
  CHECK_FALSE(is_k_connected(petersen, 4));
  CHECK(brute::is_k_connected(petersen, 3));
  CHECK_FALSE(brute::is_k_connected(petersen, 4));

  CHECK_FALSE(is_k_connected(test::path_graph(3), 2));  // middle vertex is a cutvertex

  const Graph disconnected = test::make_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_k_connected(disconnected, 1));
  CHECK_FALSE(is_k_connected(test::make_graph(1, {}), 1));
}

TEST_CASE("vertex connectivity matches brute-force cut enumeration") {
  Rng rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = test::random_graph(rng.uniform_int(1, 10), rng.uniform_int(20, 90), rng);
    const int kappa = vertex_connectivity(g);
    CHECK(kappa == brute::vertex_connectivity(g));
    for (int k = 1; k <= g.n + 1; ++k) {
      CHECK(is_k_connected(g, k) == brute::is_k_connected(g, k));
    }
  }
}
