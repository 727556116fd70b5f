#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "braesslab/oracle.hpp"

namespace fixtures {

const std::vector<Graph>& connected_catalogue(int max_n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : braesslab::oracle::connected_graph_catalogue(n)) all.push_back(std::move(g));
  return cache.emplace(max_n, std::move(all)).first->second;
}

std::vector<Graph> random_graphs(int count, int lo, int hi, int max_extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(lo, hi);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(braesslab::oracle::random_connected_graph(order(rng), max_extra, rng));
  return out;
}

Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return braesslab::oracle::relabel(g, perm);
}

bool isomorphic_by_search(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

BigInt quadratic_form(const Graph& g, const braesslab::Matrix<BigInt>& m) {
  BigInt total = 0;
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < g.order(); ++j) total += BigInt(g.degree(i)) * g.degree(j) * m(i, j);
  return total;
}

}  // namespace fixtures
