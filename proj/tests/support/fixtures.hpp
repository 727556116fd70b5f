#pragma once

#include <cstdint>
#include <vector>

#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

namespace fixtures {

using braesslab::BigInt;
using braesslab::Graph;
using braesslab::Rational;
using braesslab::Vertex;

// Every connected graph of order 1..max_n up to isomorphism (max_n <= 7).
const std::vector<Graph>& connected_catalogue(int max_n = 7);

// Deterministic random connected graphs with orders in [lo, hi] and at most
// `max_extra` edges beyond a spanning tree.
std::vector<Graph> random_graphs(int count, int lo, int hi, int max_extra, std::uint64_t seed);

// Relabels g by a random permutation drawn from seed.
Graph shuffled(const Graph& g, std::uint64_t seed);

// Isomorphism by trying every bijection. Test-only, order <= 8.
bool isomorphic_by_search(const Graph& a, const Graph& b);

// d^T M d for an integer matrix.
BigInt quadratic_form(const Graph& g, const braesslab::Matrix<BigInt>& m);

}  // namespace fixtures
