#include "braesslab/kemeny.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"

namespace braesslab {

namespace {

void require_walkable(const Graph& g, const char* context) {
  if (g.order() < 2) throw InvalidParameter(std::string(context) + ": graph needs at least 2 vertices");
  require_connected(g, context);
}

}  // namespace

KemenyValue kemeny_constant(const Graph& g) {
  require_walkable(g, "kemeny_constant");
  const auto fm = forest_matrix(g);
  Rational k(fm->dfd, 4 * BigInt(g.size()) * fm->tau);
  k.canonicalize();
  return {k, k.get_d()};
}

double kemeny_spectral(const Graph& g) {
  require_walkable(g, "kemeny_spectral");
  const int n = g.order();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    s(e.u, e.v) = w;
    s(e.v, e.u) = w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "kemeny_spectral: eigen-solver failed (info=" << static_cast<int>(solver.info()) << ", n=" << n
        << ", m=" << g.size() << ")";
    throw NumericError(msg.str());
  }
  // Eigenvalues come sorted ascending; the last one is the unit eigenvalue.
  const auto& lambda = solver.eigenvalues();
  if (std::abs(lambda(n - 1) - 1.0) > 1e-8 || lambda(n - 2) > 1.0 - 1e-12) {
    std::ostringstream msg;
    msg << "kemeny_spectral: unexpected spectrum, top eigenvalues " << lambda(n - 1) << ", " << lambda(n - 2);
    throw NumericError(msg.str());
  }
  double total = 0.0;
  for (int j = 0; j + 1 < n; ++j) total += 1.0 / (1.0 - lambda(j));
  return total;
}

Rational kemeny_mfpt(const Graph& g) {
  require_walkable(g, "kemeny_mfpt");
  const int n = g.order();
  if (n > kMfptMaxOrder)
    throw InvalidParameter("kemeny_mfpt: order " + std::to_string(n) + " above bound " +
                           std::to_string(kMfptMaxOrder));
  const auto deg = degree_vector(g);
  const Rational two_m = 2 * g.size();

  // passage(i, j): expected steps from i to first reach j.
  Matrix<Rational> passage(n, n);
  for (Vertex target = 0; target < n; ++target) {
    // d_i h_i - sum_{k ~ i} h_k = d_i for i != target, h_target = 0.
    std::vector<int> index(n, -1);
    int k = 0;
    for (Vertex x = 0; x < n; ++x)
      if (x != target) index[x] = k++;
    Matrix<Rational> a(n - 1, n - 1);
    std::vector<Rational> b(n - 1);
    for (Vertex x = 0; x < n; ++x) {
      if (x == target) continue;
      a(index[x], index[x]) = deg[x];
      b[index[x]] = deg[x];
      for (Vertex y : g.neighbours(x))
        if (y != target) a(index[x], index[y]) = -1;
    }
    const auto solved = solve_exact(std::move(a), std::move(b));
    for (Vertex x = 0; x < n; ++x)
      if (x != target) passage(x, target) = solved.x[index[x]];
  }

  Rational first;
  for (Vertex i = 0; i < n; ++i) {
    Rational sum = 0;
    for (Vertex j = 0; j < n; ++j)
      if (j != i) sum += passage(i, j) * Rational(deg[j]) / two_m;
    if (i == 0) {
      first = sum;
    } else if (sum != first) {
      throw InternalConsistency("kemeny_mfpt: start " + std::to_string(i) + " gives " + sum.get_str() +
                                ", start 0 gives " + first.get_str());
    }
  }
  return first;
}

}  // namespace braesslab
