#pragma once

#include <cstddef>
#include <memory>

#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

namespace braesslab {

// Number of spanning trees, via a Bareiss determinant of the Laplacian with
// vertex 0 removed. 0 for disconnected graphs, 1 for the trivial graph.
BigInt tree_count(const Graph& g);

// f_{i,j}: determinant of the Laplacian with rows and columns i and j
// removed, i.e. the number of 2-tree spanning forests separating i from j.
// Returns 0 when i == j.
BigInt forest_count(const Graph& g, Vertex i, Vertex j);

// F_G together with the quantities derived from it. Symmetric, zero diagonal.
struct ForestMatrix {
  Matrix<BigInt> f;
  BigInt tau;
  BigInt dfd;  // d^T F d

  const BigInt& operator()(Vertex i, Vertex j) const { return f(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  int order() const noexcept { return static_cast<int>(f.rows()); }
};

// Full F from one exact inverse of the Laplacian grounded at vertex 0:
// f_{i,j} = tau * (M_ii + M_jj - 2 M_ij). Results are memoised per graph.
// Throws DisconnectedGraph.
std::shared_ptr<const ForestMatrix> forest_matrix(const Graph& g);

// Q_{G,v} = (f^v 1^T + 1 (f^v)^T - F) / 2: q_{i,j} counts 2-tree spanning
// forests with i and j in one tree and v in the other.
struct QMatrix {
  Matrix<BigInt> q;
  Vertex anchor = 0;

  const BigInt& operator()(Vertex i, Vertex j) const { return q(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  int order() const noexcept { return static_cast<int>(q.rows()); }
};

// Built from F. Throws InternalConsistency if some f_{i,v} + f_{v,j} - f_{i,j}
// is odd, which cannot happen for a correct F.
QMatrix q_matrix(const Graph& g, Vertex v);

// Q_{G,v} as tau times the inverse of the Laplacian grounded at v (padded with
// a zero row and column at v). Independent of F.
QMatrix grounded_q_matrix(const Graph& g, Vertex v);

// Effective resistance f_{i,j} / tau.
Rational resistance_distance(const Graph& g, Vertex i, Vertex j);

// d^T f^v.
BigInt dvec_dot_fv(const Graph& g, Vertex v);

// d^T F d.
BigInt dfd(const Graph& g);

// d^T F d of identify(h1, v1, h2, v2), assembled from the pieces only:
// tau2 dFd(H1) + tau1 dFd(H2) + 4 tau2 m2 dfv(H1) + 4 tau1 m1 dfv(H2).
BigInt one_separation_dfd(const Graph& h1, Vertex v1, const Graph& h2, Vertex v2);

struct AnchoredMoment {
  BigInt tau;
  BigInt dqd;             // d^T Q_{G,v} d
  Rational dqd_over_tau;  // d^T L_v^{-1} d
};

// d^T Q_{G,v} d from a single sparse solve L_v x = d, with tau read off the
// pivots. Cheap enough for long paths and cycles; never forms F.
AnchoredMoment anchored_moment(const Graph& g, Vertex v);

// Graph Laplacian as an integer matrix.
Matrix<BigInt> laplacian(const Graph& g);

// Memo cache control, mainly for tests and long-running scans.
void clear_forest_cache();
std::size_t forest_cache_size();

}  // namespace braesslab
