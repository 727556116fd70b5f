#include "braesslab/forest.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "braesslab/errors.hpp"

namespace braesslab {

namespace {

constexpr std::size_t kCacheLimit = 8192;

class ForestCache {
 public:
  std::shared_ptr<const ForestMatrix> find(const Graph& g) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(g);
    return it == entries_.end() ? nullptr : it->second;
  }

  void insert(const Graph& g, std::shared_ptr<const ForestMatrix> value) {
    std::unique_lock lock(mutex_);
    if (entries_.size() >= kCacheLimit) entries_.clear();
    entries_.emplace(g, std::move(value));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Graph, std::shared_ptr<const ForestMatrix>> entries_;
};

ForestCache& cache() {
  static ForestCache instance;
  return instance;
}

// Laplacian with the listed vertices' rows and columns removed.
Matrix<BigInt> reduced_laplacian(const Graph& g, Vertex drop1, Vertex drop2) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != drop1 && x != drop2) index[x] = k++;
  Matrix<BigInt> m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (Vertex x = 0; x < g.order(); ++x)
    if (index[x] >= 0) m(index[x], index[x]) = g.degree(x);
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      m(index[e.u], index[e.v]) = -1;
      m(index[e.v], index[e.u]) = -1;
    }
  return m;
}

Matrix<Rational> to_rational(const Matrix<BigInt>& m) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

BigInt as_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw InternalConsistency(std::string(what) + " is not an integer: " + r.get_str());
  return r.get_num();
}

std::shared_ptr<const ForestMatrix> compute_forest_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  auto out = std::make_shared<ForestMatrix>();
  out->f = Matrix<BigInt>(n, n);
  if (n == 1) {
    out->tau = 1;
    out->dfd = 0;
    return out;
  }
  auto inv = invert_exact(to_rational(reduced_laplacian(g, 0, 0)));
  out->tau = as_integer(inv.determinant, "grounded Laplacian determinant");
  // M padded with a zero row/column at vertex 0.
  auto m = [&](std::size_t i, std::size_t j) -> Rational {
    if (i == 0 || j == 0) return 0;
    return inv.inverse(i - 1, j - 1);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational omega = m(i, i) + m(j, j) - 2 * m(i, j);
      out->f(i, j) = as_integer(omega * out->tau, "tau * resistance");
      out->f(j, i) = out->f(i, j);
    }
  const auto d = degree_vector(g);
  BigInt total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out->f(i, j) != 0) total += d[i] * d[j] * out->f(i, j);
  out->dfd = total;
  return out;
}

}  // namespace

Matrix<BigInt> laplacian(const Graph& g) { return reduced_laplacian(g, -1, -1); }

BigInt tree_count(const Graph& g) {
  if (g.order() == 0) throw InvalidParameter("tree_count: empty graph");
  if (g.order() == 1) return 1;
  return bareiss_determinant(reduced_laplacian(g, 0, 0));
}

BigInt forest_count(const Graph& g, Vertex i, Vertex j) {
  if (!g.has_vertex(i) || !g.has_vertex(j)) throw InvalidParameter("forest_count: invalid vertex");
  if (i == j) return 0;
  return bareiss_determinant(reduced_laplacian(g, i, j));
}

std::shared_ptr<const ForestMatrix> forest_matrix(const Graph& g) {
  require_connected(g, "forest_matrix");
  if (auto hit = cache().find(g)) return hit;
  auto value = compute_forest_matrix(g);
  cache().insert(g, value);
  return value;
}

QMatrix q_matrix(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("q_matrix: invalid vertex");
  const auto fm = forest_matrix(g);
  const auto n = static_cast<std::size_t>(g.order());
  QMatrix out{Matrix<BigInt>(n, n), v};
  const auto sv = static_cast<std::size_t>(v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt twice = fm->f(i, sv) + fm->f(sv, j) - fm->f(i, j);
      if (mpz_odd_p(twice.get_mpz_t()))
        throw InternalConsistency("q_matrix: odd f_iv + f_vj - f_ij at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
      mpz_divexact_ui(twice.get_mpz_t(), twice.get_mpz_t(), 2);
      out.q(i, j) = std::move(twice);
    }
  return out;
}

QMatrix grounded_q_matrix(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("grounded_q_matrix: invalid vertex");
  require_connected(g, "grounded_q_matrix");
  const auto n = static_cast<std::size_t>(g.order());
  QMatrix out{Matrix<BigInt>(n, n), v};
  if (n == 1) return out;
  auto inv = invert_exact(to_rational(reduced_laplacian(g, v, v)));
  const BigInt tau = as_integer(inv.determinant, "grounded Laplacian determinant");
  auto local = [&](std::size_t x) { return x < static_cast<std::size_t>(v) ? x : x - 1; };
  for (std::size_t i = 0; i < n; ++i) {
    if (i == static_cast<std::size_t>(v)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == static_cast<std::size_t>(v)) continue;
      out.q(i, j) = as_integer(inv.inverse(local(i), local(j)) * tau, "tau * grounded inverse");
    }
  }
  return out;
}

Rational resistance_distance(const Graph& g, Vertex i, Vertex j) {
  if (!g.has_vertex(i) || !g.has_vertex(j)) throw InvalidParameter("resistance_distance: invalid vertex");
  const auto fm = forest_matrix(g);
  Rational r((*fm)(i, j), fm->tau);
  r.canonicalize();
  return r;
}

BigInt dvec_dot_fv(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("dvec_dot_fv: invalid vertex");
  const auto fm = forest_matrix(g);
  BigInt total = 0;
  for (Vertex i = 0; i < g.order(); ++i) total += g.degree(i) * (*fm)(i, v);
  return total;
}

BigInt dfd(const Graph& g) { return forest_matrix(g)->dfd; }

BigInt one_separation_dfd(const Graph& h1, Vertex v1, const Graph& h2, Vertex v2) {
  const auto f1 = forest_matrix(h1);
  const auto f2 = forest_matrix(h2);
  const BigInt m1 = h1.size();
  const BigInt m2 = h2.size();
  return f2->tau * f1->dfd + f1->tau * f2->dfd + 4 * f2->tau * m2 * dvec_dot_fv(h1, v1) +
         4 * f1->tau * m1 * dvec_dot_fv(h2, v2);
}

AnchoredMoment anchored_moment(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("anchored_moment: invalid vertex");
  require_connected(g, "anchored_moment");
  if (g.order() == 1) return {1, 0, 0};
  const auto lap = reduced_laplacian(g, v, v);
  std::vector<Rational> d;
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v) d.emplace_back(g.degree(x));
  auto solved = solve_exact(to_rational(lap), d);
  Rational quad = 0;
  for (std::size_t i = 0; i < d.size(); ++i) quad += d[i] * solved.x[i];
  AnchoredMoment out;
  out.tau = as_integer(solved.determinant, "grounded Laplacian determinant");
  out.dqd = as_integer(quad * out.tau, "d^T Q d");
  out.dqd_over_tau = quad;
  return out;
}

void clear_forest_cache() { cache().clear(); }
std::size_t forest_cache_size() { return cache().size(); }

}  // namespace braesslab
