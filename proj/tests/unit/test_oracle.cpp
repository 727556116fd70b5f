#include <doctest.h>

#include <set>

#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/kemeny.hpp"
#include "braesslab/oracle.hpp"
#include "fixtures.hpp"

using namespace braesslab;

TEST_CASE("catalogue sizes") {
  // Connected graphs and trees up to isomorphism.
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::connected_graph_catalogue(n).size() == connected[n - 1]);
  const int trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) CHECK(oracle::tree_catalogue(n).size() == trees[n - 1]);
  CHECK_THROWS_AS(oracle::connected_graph_catalogue(8), OracleBoundExceeded);
}

TEST_CASE("spanning tree enumeration") {
  CHECK(oracle::enumerate_spanning_trees(complete_graph(6)) == 1296);
  CHECK(oracle::enumerate_spanning_trees(cycle_graph(7)) == 7);
  std::set<std::vector<Edge>> seen;
  oracle::enumerate_spanning_trees(complete_graph(4), oracle::kDefaultBound,
                                   [&](const std::vector<Edge>& t) { seen.insert(t); });
  CHECK(seen.size() == 16);
  CHECK_THROWS_AS(oracle::enumerate_spanning_trees(path_graph(11)), OracleBoundExceeded);
}

TEST_CASE("two-forest census matches Q and F") {
  for (const auto& g : fixtures::random_graphs(12, 3, 7, 4, 66)) {
    const auto fm = forest_matrix(g);
    const auto hist = oracle::two_forest_histogram(g);
    std::uint64_t sum = 0;
    for (const auto& [mask, count] : hist.sides) sum += count;
    CHECK(sum == hist.total);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto q = q_matrix(g, v);
      for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = 0; j < g.order(); ++j) {
          const auto c = oracle::census(g, i, j, v);
          CHECK(c.i_j == (*fm)(i, j));
          if (i != v && j != v) CHECK(c.ij_v == q(i, j));
          // Every (i;j) forest puts v with exactly one of them.
          if (i != v && j != v && i != j) CHECK(c.i_j == c.i_vj + c.iv_j);
        }
    }
  }
}

TEST_CASE("brute force equals determinant route on every small connected graph") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : oracle::connected_graph_catalogue(n)) {
      CHECK(oracle::enumerate_spanning_trees(g) == tree_count(g));
      CHECK(oracle::forest_matrix_bruteforce(g) == forest_matrix(g)->f);
      CHECK(oracle::q_matrix_bruteforce(g, n - 1) == q_matrix(g, n - 1).q);
      CHECK(oracle::kemeny_bruteforce(g).kappa == kemeny_constant(g).exact);
    }
}

TEST_CASE("canonical codes") {
  for (const auto& g : fixtures::random_graphs(30, 2, 8, 6, 9)) {
    const auto h = fixtures::shuffled(g, 1234);
    CHECK(oracle::isomorphic(g, h));
    CHECK(oracle::canonical_code(g) == oracle::canonical_code(h));
  }
  const auto graphs = fixtures::random_graphs(60, 5, 6, 3, 10);
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
    const auto& a = graphs[i];
    const auto& b = graphs[i + 1];
    if (a.order() != b.order()) continue;
    CHECK(oracle::isomorphic(a, b) == fixtures::isomorphic_by_search(a, b));
  }
  CHECK_FALSE(oracle::isomorphic(path_graph(4), star_graph(4)));
}

TEST_CASE("random connected graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_connected_graph(9, 4, rng);
    CHECK(g.order() == 9);
    CHECK(is_connected(g));
    CHECK(g.size() <= 8 + 4);
  }
}
