#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

namespace braesslab {

// phi_G(v) = d^T (2 f^v 1^T - F) d = 2 d^T Q_{G,v} d. Strictly positive.
// Throws InvalidParameter for the trivial graph, DisconnectedGraph.
BigInt phi_v(const Graph& g, Vertex v);

struct PhiPolys {
  Rational phi1;  // weight of 4 m^2 tau k
  Rational phi2;  // weight of 2 m tau k / 3
  Rational phi3;  // weight of 2 tau k / 3
};

// Throws InvalidParameter unless k1, k2 >= 0 and k1 + k2 >= 2.
PhiPolys phi_polys(int k1, int k2);

struct PhiBreakdown {
  Vertex v = 0;
  int k1 = 0;
  int k2 = 0;
  int k = 0;  // k1 + k2 + 1, the length of the closed cycle
  BigInt phi_v;
  PhiPolys polys;
  BigInt m;
  BigInt tau;
  Rational phi;  // k phi_v + 4 m^2 tau k phi1 + (2 m tau k / 3) phi2 + (2 tau k / 3) phi3
  bool verdict = false;   // phi > 0
  bool boundary = false;  // phi == 0: kappa unchanged, not paradoxical
};

PhiBreakdown big_phi(const Graph& g, Vertex v, int k1, int k2);

// Phi from an already known phi_v, m and tau.
PhiBreakdown assemble_phi(Vertex v, int k1, int k2, const BigInt& phi_v, const BigInt& m, const BigInt& tau);

struct ParadoxEvidence {
  PhiBreakdown breakdown;
  bool verified = false;
  // Filled only when verified.
  Graph open_graph;    // twin paths attached at v
  Graph closed_graph;  // tip-tip edge inserted
  Rational kappa_open;
  Rational kappa_closed;
  Rational delta;  // kappa_closed - kappa_open

  bool paradoxical() const noexcept { return breakdown.verdict; }
};

// Verdict from big_phi. With verify set, also builds both graphs, computes
// the exact change in kappa and checks it equals phi / (4 k (m+k) (m+k-1) tau),
// which in particular pins the sign. Throws InternalConsistency on mismatch.
ParadoxEvidence is_paradoxical_at(const Graph& g, Vertex v, int k1, int k2, bool verify = false);

struct BraessEntry {
  Edge edge;
  Rational delta;  // kappa(G + edge) - kappa(G)
  bool is_braess = false;
};

struct BraessScanResult {
  std::vector<BraessEntry> entries;  // lexicographic by edge
  bool paradoxical = false;
  bool no_non_edges = false;  // complete graph: nothing to scan
};

// Exact change in kappa for every non-edge. threads == 0 picks the hardware
// concurrency. Output does not depend on the thread count.
BraessScanResult braess_scan(const Graph& g, unsigned threads = 1);

// d^T F d of h with a path on k1 + k2 + 1 vertices attached at v by its
// (k1+1)-th vertex, from the closed form. Requires k1, k2 >= 0, k1 + k2 >= 1.
BigInt dfd_with_path(const Graph& h, Vertex v, int k1, int k2);

// d^T F d of h with a cycle of length k >= 3 attached at v, from the closed form.
BigInt dfd_with_cycle(const Graph& h, Vertex v, int k);

// The triangle-with-pendent fixture (triangle_with_pendent()) and the vertex
// at which its phi equals 118.
inline constexpr Vertex kFixtureAnchor = 0;

}  // namespace braesslab
