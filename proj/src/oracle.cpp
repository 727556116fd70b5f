#include "braesslab/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "braesslab/errors.hpp"

namespace braesslab::oracle {

namespace {

void check_bound(const Graph& g, int bound, const char* context) {
  if (g.order() > bound)
    throw OracleBoundExceeded(std::string(context) + ": order " + std::to_string(g.order()) + " exceeds oracle bound " +
                              std::to_string(bound));
  if (g.order() > 31) throw OracleBoundExceeded(std::string(context) + ": order above 31 is never enumerated");
  if (g.order() == 0) throw InvalidParameter(std::string(context) + ": empty graph");
}

struct UnionFind {
  std::array<int, 32> parent{};

  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

// Calls leaf(chosen) for every acyclic edge subset with n - components edges.
class ForestWalker {
 public:
  ForestWalker(const Graph& g, int components, std::function<void(const std::vector<Edge>&, const UnionFind&)> leaf)
      : g_(g), need_(g.order() - components), leaf_(std::move(leaf)) {}

  void run() {
    if (need_ < 0) return;
    std::vector<Edge> chosen;
    walk(0, UnionFind(g_.order()), chosen);
  }

 private:
  void walk(std::size_t index, const UnionFind& uf, std::vector<Edge>& chosen) {
    const int missing = need_ - static_cast<int>(chosen.size());
    if (missing == 0) {
      leaf_(chosen, uf);
      return;
    }
    if (g_.edges().size() - index < static_cast<std::size_t>(missing)) return;
    const Edge e = g_.edges()[index];
    const int a = uf.find(e.u);
    const int b = uf.find(e.v);
    if (a != b) {
      UnionFind joined = uf;
      joined.parent[a] = b;
      chosen.push_back(e);
      walk(index + 1, joined, chosen);
      chosen.pop_back();
    }
    walk(index + 1, uf, chosen);
  }

  const Graph& g_;
  int need_;
  std::function<void(const std::vector<Edge>&, const UnionFind&)> leaf_;
};

}  // namespace

BigInt enumerate_spanning_trees(const Graph& g, int bound,
                                const std::function<void(const std::vector<Edge>&)>& visit) {
  check_bound(g, bound, "enumerate_spanning_trees");
  std::uint64_t count = 0;
  ForestWalker(g, 1, [&](const std::vector<Edge>& edges, const UnionFind&) {
    ++count;
    if (visit) visit(edges);
  }).run();
  return BigInt(std::to_string(count));
}

TwoForestHistogram two_forest_histogram(const Graph& g, int bound) {
  check_bound(g, bound, "two_forest_histogram");
  TwoForestHistogram out;
  out.order = g.order();
  if (g.order() < 2) return out;
  std::map<std::uint32_t, std::uint64_t> counts;
  ForestWalker(g, 2, [&](const std::vector<Edge>&, const UnionFind& uf) {
    const int root = uf.find(0);
    std::uint32_t mask = 0;
    for (Vertex x = 0; x < g.order(); ++x)
      if (uf.find(x) == root) mask |= 1u << x;
    ++counts[mask];
  }).run();
  for (const auto& [mask, c] : counts) {
    out.sides.emplace_back(mask, c);
    out.total += c;
  }
  return out;
}

ForestCensus census(const Graph& g, Vertex i, Vertex j, Vertex v, int bound) {
  if (!g.has_vertex(i) || !g.has_vertex(j) || !g.has_vertex(v)) throw InvalidParameter("census: invalid vertex");
  const auto hist = two_forest_histogram(g, bound);
  std::uint64_t i_j = 0, ij_v = 0, i_vj = 0, iv_j = 0;
  for (const auto& [mask, c] : hist.sides) {
    const bool si = mask >> i & 1u;
    const bool sj = mask >> j & 1u;
    const bool sv = mask >> v & 1u;
    if (si != sj) i_j += c;
    if (si == sj && sv != si) ij_v += c;
    if (sv == sj && si != sv) i_vj += c;
    if (si == sv && sj != si) iv_j += c;
  }
  auto big = [](std::uint64_t x) { return BigInt(std::to_string(x)); };
  return {big(i_j), big(ij_v), big(i_vj), big(iv_j)};
}

Matrix<BigInt> forest_matrix_bruteforce(const Graph& g, int bound) {
  const auto hist = two_forest_histogram(g, bound);
  const int n = g.order();
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [mask, c] : hist.sides)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((mask >> a & 1u) != (mask >> b & 1u)) acc[a * n + b] += c;
  Matrix<BigInt> f(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(a, b) = BigInt(std::to_string(acc[a * n + b]));
  return f;
}

Matrix<BigInt> q_matrix_bruteforce(const Graph& g, Vertex v, int bound) {
  if (!g.has_vertex(v)) throw InvalidParameter("q_matrix_bruteforce: invalid vertex");
  const auto hist = two_forest_histogram(g, bound);
  const int n = g.order();
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [mask, c] : hist.sides) {
    const bool sv = mask >> v & 1u;
    for (int a = 0; a < n; ++a) {
      if ((mask >> a & 1u) == sv) continue;
      for (int b = 0; b < n; ++b)
        if ((mask >> b & 1u) != sv) acc[a * n + b] += c;
    }
  }
  Matrix<BigInt> q(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q(a, b) = BigInt(std::to_string(acc[a * n + b]));
  return q;
}

KemenyCheck kemeny_bruteforce(const Graph& g, int bound) {
  check_bound(g, bound, "kemeny_bruteforce");
  if (g.order() < 2) throw InvalidParameter("kemeny_bruteforce: graph needs at least 2 vertices");
  require_connected(g, "kemeny_bruteforce");
  const int n = g.order();
  const Rational two_m = 2 * g.size();
  std::vector<Rational> w(n);
  for (Vertex x = 0; x < n; ++x) w[x] = Rational(g.degree(x)) / two_m;

  Matrix<Rational> a(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a(x, y) = (x == y ? 1 : 0) + w[y];
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbours(x)) a(x, y) -= Rational(1, g.degree(x));
  const auto z = invert_exact(std::move(a)).inverse;

  auto mfpt = [&](int x, int y) -> Rational {
    if (x == y) return 1 / w[x];
    return (z(y, y) - z(x, y)) / w[y];
  };

  KemenyCheck out;
  for (int x = 0; x < n; ++x) {
    Rational row = 0;
    for (int y = 0; y < n; ++y)
      if (y != x) row += mfpt(x, y) * w[y];
    if (x == 0) {
      out.kappa = row;
    } else if (row != out.kappa) {
      throw InternalConsistency("kemeny_bruteforce: start-state sums differ (" + out.kappa.get_str() + " vs " +
                                row.get_str() + ")");
    }
    out.weighted_sum_return_time += w[x] * (row + mfpt(x, x) * w[x]);
    out.weighted_sum_zero += w[x] * row;
  }
  if (out.weighted_sum_return_time != out.kappa + 1)
    throw InternalConsistency("kemeny_bruteforce: weighted passage-time sum " + out.weighted_sum_return_time.get_str() +
                              " is not kappa + 1");
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidParameter("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), std::move(edges));
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw OracleBoundExceeded("canonical_code: order above 11");
  // Refine by (degree, sorted neighbour degrees).
  std::vector<std::pair<std::vector<int>, Vertex>> keyed;
  for (Vertex x = 0; x < n; ++x) {
    std::vector<int> key{g.degree(x)};
    for (Vertex y : g.neighbours(x)) key.push_back(g.degree(y));
    std::sort(key.begin() + 1, key.end());
    keyed.emplace_back(std::move(key), x);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> order;
  std::vector<std::pair<int, int>> classes;  // [begin, end) in order
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back(i, i);
    classes.back().second = i + 1;
    order.push_back(keyed[i].second);
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == classes.size()) {
      std::uint64_t code = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) code = code << 1 | (g.has_edge(order[a], order[b]) ? 1u : 0u);
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + classes[c].first;
    auto last = order.begin() + classes[c].second;
    std::sort(first, last);
    do {
      permute(c + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> connected_graph_catalogue(int n) {
  if (n < 1 || n > 7) throw OracleBoundExceeded("connected_graph_catalogue: order must be in 1..7");
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int order = 2; order <= n; ++order) {
    std::map<std::pair<int, std::uint64_t>, Graph> seen;
    for (const auto& g : level) {
      const Vertex fresh = order - 1;
      for (std::uint32_t subset = 1; subset < (1u << (order - 1)); ++subset) {
        std::vector<Edge> edges = g.edges();
        for (Vertex x = 0; x < order - 1; ++x)
          if (subset >> x & 1u) edges.push_back({x, fresh});
        Graph candidate(order, std::move(edges));
        seen.try_emplace({candidate.size(), canonical_code(candidate)}, candidate);
      }
    }
    level.clear();
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

namespace {

std::string rooted_code(const Graph& t, Vertex root, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex y : t.neighbours(root))
    if (y != parent) children.push_back(rooted_code(t, y, root));
  std::sort(children.begin(), children.end());
  std::string s = "(";
  for (const auto& c : children) s += c;
  return s + ")";
}

std::string tree_code(const Graph& t) {
  const int n = t.order();
  if (n <= 2) return std::to_string(n);
  std::vector<int> degree(n);
  std::vector<Vertex> leaves;
  for (Vertex x = 0; x < n; ++x) {
    degree[x] = t.degree(x);
    if (degree[x] <= 1) leaves.push_back(x);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<Vertex> next;
    for (Vertex x : leaves)
      for (Vertex y : t.neighbours(x))
        if (--degree[y] == 1) next.push_back(y);
    for (Vertex x : leaves) degree[x] = 0;
    leaves = std::move(next);
  }
  std::string best;
  for (Vertex c : leaves) {
    auto code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<Graph> tree_catalogue(int n) {
  if (n < 1 || n > 12) throw OracleBoundExceeded("tree_catalogue: order must be in 1..12");
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> seen;
    for (const auto& t : level)
      for (Vertex x = 0; x < order - 1; ++x) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({x, order - 1});
        Graph candidate(order, std::move(edges));
        seen.try_emplace(tree_code(candidate), candidate);
      }
    level.clear();
    for (auto& [code, t] : seen) level.push_back(std::move(t));
  }
  return level;
}

Graph random_connected_graph(int n, int max_extra, std::mt19937_64& rng) {
  if (n < 1) throw InvalidParameter("random_connected_graph: n must be positive");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const Vertex a = perm[i];
    const Vertex b = perm[pick(rng)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  const long capacity = static_cast<long>(n) * (n - 1) / 2 - static_cast<long>(edges.size());
  std::uniform_int_distribution<int> extra_count(0, std::max(0, max_extra));
  int extra = static_cast<int>(std::min<long>(extra_count(rng), capacity));
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (extra > 0) {
    const Vertex a = vertex(rng);
    const Vertex b = vertex(rng);
    if (a == b) continue;
    if (edges.insert({std::min(a, b), std::max(a, b)}).second) --extra;
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace braesslab::oracle
