#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

// Brute-force ground truth for small graphs. Every routine here refuses
// inputs above its order bound with OracleBoundExceeded.
namespace braesslab::oracle {

inline constexpr int kDefaultBound = 10;

// Counts spanning trees by include/exclude recursion over the edges with
// union-find pruning. `visit`, when set, receives each tree's edge list.
BigInt enumerate_spanning_trees(const Graph& g, int bound = kDefaultBound,
                                const std::function<void(const std::vector<Edge>&)>& visit = {});

// Every 2-tree spanning forest, keyed by the vertex set of the tree holding
// vertex 0 (bit x set for vertex x).
struct TwoForestHistogram {
  int order = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> sides;  // sorted by mask
  std::uint64_t total = 0;
};

TwoForestHistogram two_forest_histogram(const Graph& g, int bound = kDefaultBound);

struct ForestCensus {
  BigInt i_j;     // |F(i;j)|    i and j in different trees
  BigInt ij_v;    // |F(i,j;v)|  i, j together, v apart
  BigInt i_vj;    // |F(i;v,j)|  v, j together, i apart
  BigInt iv_j;    // |F(i,v;j)|  i, v together, j apart
};

ForestCensus census(const Graph& g, Vertex i, Vertex j, Vertex v, int bound = kDefaultBound);

// Whole matrices from one enumeration.
Matrix<BigInt> forest_matrix_bruteforce(const Graph& g, int bound = kDefaultBound);
Matrix<BigInt> q_matrix_bruteforce(const Graph& g, Vertex v, int bound = kDefaultBound);

struct KemenyCheck {
  Rational kappa;
  // sum_{i,j} w_i m_{i,j} w_j under the two conventions for m_{i,i}.
  Rational weighted_sum_return_time;  // m_{i,i} = 1 / w_i
  Rational weighted_sum_zero;         // m_{i,i} = 0
};

// kappa from the fundamental matrix Z = (I - P + 1 w^T)^{-1}, with
// m_{i,j} = (z_jj - z_ij) / w_j. Checks that the start-state sums agree and
// that kappa + 1 equals the return-time weighted sum.
KemenyCheck kemeny_bruteforce(const Graph& g, int bound = kDefaultBound);

// Graph with vertex x renamed to perm[x].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Canonical adjacency code: minimum over vertex orders that respect a degree
// refinement. Equal codes iff isomorphic. Order at most 11.
std::uint64_t canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of connected graphs of order n
// (1 <= n <= 7), sorted by (size, code).
std::vector<Graph> connected_graph_catalogue(int n);

// One representative per isomorphism class of trees of order n (1 <= n <= 12).
std::vector<Graph> tree_catalogue(int n);

// Random spanning tree plus up to `max_extra` random extra edges.
Graph random_connected_graph(int n, int max_extra, std::mt19937_64& rng);

}  // namespace braesslab::oracle
