#pragma once

#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

namespace braesslab {

struct KemenyValue {
  Rational exact;
  double approx = 0.0;
};

// kappa(G) = d^T F d / (4 m tau), fully reduced.
// Throws DisconnectedGraph, or InvalidParameter for the trivial graph.
KemenyValue kemeny_constant(const Graph& g);

// Floating-point sum of 1 / (1 - lambda) over the non-unit eigenvalues of the
// walk matrix, taken from the symmetric form D^{-1/2} A D^{-1/2}.
double kemeny_spectral(const Graph& g);

// Largest order kemeny_mfpt accepts.
inline constexpr int kMfptMaxOrder = 64;

// Kemeny's constant from exact mean first passage times: for every start i
// solves for m_{i,j}, forms sum_{j != i} m_{i,j} w_j with w = d / 2m and
// checks that the sum does not depend on i. Throws InternalConsistency if it
// does, InvalidParameter above kMfptMaxOrder.
Rational kemeny_mfpt(const Graph& g);

}  // namespace braesslab
