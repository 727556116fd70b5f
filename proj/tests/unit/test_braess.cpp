#include <doctest.h>

#include "braesslab/braess.hpp"
#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/kemeny.hpp"
#include "fixtures.hpp"

using namespace braesslab;

namespace {

int sign_of(const Rational& r) { return sgn(r); }

// Change in kappa from closing the twin paths, via mean first passage times.
Rational delta_by_mfpt(const Graph& g, Vertex v, int k1, int k2) {
  const auto open = attach_twin_paths(g, {v, k1, k2});
  const auto closed = close_twin_paths(open.graph, {open.tip1, open.tip2});
  return kemeny_mfpt(closed) - kemeny_mfpt(open.graph);
}

}  // namespace

TEST_CASE("phi polynomials at tabulated pairs") {
  auto check = [](int k1, int k2, Rational p1, Rational p2, Rational p3) {
    const auto p = phi_polys(k1, k2);
    CHECK(p.phi1 == p1);
    CHECK(p.phi2 == p2);
    CHECK(p.phi3 == p3);
    const auto q = phi_polys(k2, k1);
    CHECK(q.phi1 == p.phi1);
    CHECK(q.phi2 == p.phi2);
    CHECK(q.phi3 == p.phi3);
  };
  check(1, 2, 0, -27, -48);
  check(2, 2, 0, -60, -180);
  check(2, 0, Rational(-4, 3), -34, -6);
  check(3, 2, Rational(-4, 3), -163, -480);
  CHECK(phi_polys(1, 1).phi1 == Rational(2, 3));
  CHECK_THROWS_AS(phi_polys(1, 0), InvalidParameter);
  CHECK_THROWS_AS(phi_polys(-1, 4), InvalidParameter);
}

TEST_CASE("phi_v closed forms") {
  for (int n = 3; n <= 9; ++n) {
    BigInt tau_k;
    mpz_ui_pow_ui(tau_k.get_mpz_t(), n, n - 2);
    CHECK(phi_v(complete_graph(n), 0) == 2 * tau_k * ((n - 1) * (n - 1) * (n - 1)));
    CHECK(3 * phi_v(cycle_graph(n), 1) == 2 * (n - 1) * n * n * (n + 1));
    CHECK(phi_v(star_graph(n), 0) == 2 * (n - 1) * (4 * n - 7));
    CHECK(phi_v(star_graph(n), n - 1) == 2 * (n - 1));
  }
  CHECK(phi_v(complete_graph(4), 2) == 864);
  CHECK_THROWS_AS(big_phi(Graph(1, std::vector<Edge>{}), 0, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(phi_v(Graph(1, std::vector<Edge>{}), 0), InvalidParameter);
}

TEST_CASE("Phi matches the expanded polynomials for stars, cycles and complete graphs") {
  for (int n = 3; n <= 40; ++n) {
    const auto s = star_graph(n);
    const BigInt N = n;
    CHECK(big_phi(s, 0, 2, 0).phi == Rational(8 * N * N - 102 * N + 82));
    CHECK(big_phi(s, 0, 2, 1).phi == Rational(32 * N * N - 160 * N));
    CHECK(big_phi(s, 0, 2, 2).phi == Rational(40 * N * N - 310 * N - 330));
    CHECK(big_phi(s, 0, 3, 2).phi == Rational(16 * N * N - 720 * N - 1216));
  }
  for (int n = 3; n <= 14; ++n) {
    const BigInt N = n;
    const auto c = cycle_graph(n);
    CHECK(big_phi(c, 0, 1, 2).phi == Rational(4 * N * (2 * (N - 1) * N * (N + 1) / 3 - 18 * N - 32)));
    CHECK(big_phi(c, 0, 2, 2).phi == Rational(5 * N * (2 * (N - 1) * N * (N + 1) / 3 - 40 * N - 120)));
    const auto k = complete_graph(n);
    const BigInt tau = tree_count(k);
    CHECK(big_phi(k, 0, 1, 2).phi == Rational(4 * tau * (2 * (N - 1) * (N - 1) * (N - 1) - 9 * N * (N - 1) - 32)));
    CHECK(big_phi(k, 0, 2, 2).phi == Rational(5 * tau * (2 * (N - 1) * (N - 1) * (N - 1) - 20 * N * (N - 1) - 120)));
  }
  const auto boundary = big_phi(cycle_graph(6), 0, 1, 2);
  CHECK(boundary.boundary);
  CHECK_FALSE(boundary.verdict);
}

TEST_CASE("six-vertex star at a pendent vertex with paths of length 1 and 2") {
  const auto ev = is_paradoxical_at(star_graph(6), 0, 1, 2, true);
  REQUIRE(ev.verified);
  CHECK(ev.paradoxical());
  CHECK(ev.delta > 0);
  CHECK(std::abs(to_double(ev.delta) - 0.1667) < 5e-4);
  CHECK(ev.delta == delta_by_mfpt(star_graph(6), 0, 1, 2));
  CHECK(ev.open_graph.order() == 9);
  CHECK(ev.closed_graph.size() == 9);
}

TEST_CASE("sign of Phi equals sign of the change in kappa") {
  for (const auto& g : fixtures::random_graphs(30, 2, 6, 5, 1234))
    for (Vertex v = 0; v < g.order(); ++v)
      for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = 0; k1 + k2 <= 4; ++k2) {
          if (k1 + k2 < 2) continue;
          const auto ev = is_paradoxical_at(g, v, k1, k2, true);
          const auto delta = delta_by_mfpt(g, v, k1, k2);
          CHECK(ev.delta == delta);
          CHECK(sign_of(ev.breakdown.phi) == sign_of(delta));
          CHECK(ev.breakdown.boundary == (delta == 0));
        }
}

TEST_CASE("twin paths of length one are always paradoxical") {
  for (const auto& g : fixtures::random_graphs(40, 2, 9, 6, 55))
    for (Vertex v = 0; v < g.order(); ++v) CHECK(big_phi(g, v, 1, 1).verdict);
}

TEST_CASE("Phi is symmetric in the two path lengths") {
  for (const auto& g : fixtures::random_graphs(15, 2, 8, 5, 19))
    for (Vertex v = 0; v < g.order(); ++v)
      for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = k1 + 1; k2 <= 5; ++k2)
          if (k1 + k2 >= 2) CHECK(big_phi(g, v, k1, k2).phi == big_phi(g, v, k2, k1).phi);
}

TEST_CASE("Phi is invariant under relabelling") {
  for (const auto& g : fixtures::random_graphs(10, 2, 8, 5, 3)) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) perm[x] = g.order() - 1 - x;
    Graph h(g.order(), std::vector<Edge>{});
    for (const auto& e : g.edges()) h = h.with_edge(perm[e.u], perm[e.v]);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(big_phi(g, v, 1, 2).phi == big_phi(h, perm[v], 1, 2).phi);
  }
}

TEST_CASE("path and cycle attachment closed forms") {
  for (const auto& h : fixtures::random_graphs(12, 1, 6, 4, 8))
    for (Vertex v = 0; v < h.order(); ++v) {
      for (int k1 = 0; k1 <= 3; ++k1)
        for (int k2 = 0; k2 <= 3; ++k2) {
          if (k1 + k2 < 1) continue;
          const Graph path = path_graph(k1 + k2 + 1);
          const auto glued = identify(h, v, path, k1).graph;
          CHECK(dfd_with_path(h, v, k1, k2) == dfd(glued));
        }
      for (int k = 3; k <= 7; ++k)
        CHECK(dfd_with_cycle(h, v, k) == dfd(identify(h, v, cycle_graph(k), 0).graph));
    }
  CHECK_THROWS_AS(dfd_with_cycle(path_graph(3), 0, 2), InvalidParameter);
  CHECK_THROWS_AS(dfd_with_path(path_graph(3), 0, 0, 0), InvalidParameter);
}

TEST_CASE("braess scan") {
  for (const auto& g : fixtures::random_graphs(12, 3, 8, 3, 41)) {
    const auto one = braess_scan(g, 1);
    const auto many = braess_scan(g, 4);
    const auto base = kemeny_constant(g).exact;
    REQUIRE(one.entries.size() == g.non_edges().size());
    REQUIRE(many.entries.size() == one.entries.size());
    bool any = false;
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
      const auto& e = one.entries[i];
      CHECK(e.edge == g.non_edges()[i]);
      CHECK(e.delta == kemeny_constant(g.with_edge(e.edge.u, e.edge.v)).exact - base);
      CHECK(e.is_braess == (e.delta > 0));
      CHECK(many.entries[i].delta == e.delta);
      any = any || e.is_braess;
    }
    CHECK(one.paradoxical == any);
  }
  const auto complete = braess_scan(complete_graph(5));
  CHECK(complete.no_non_edges);
  CHECK(complete.entries.empty());
  CHECK_FALSE(complete.paradoxical);
  // Closing two pendent twins of a star at a leaf is a Braess edge.
  const auto open = attach_twin_paths(star_graph(6), {0, 1, 2});
  const auto scan = braess_scan(open.graph);
  CHECK(scan.paradoxical);
}

TEST_CASE("fixture anchor") {
  const auto h = triangle_with_pendent();
  CHECK(phi_v(h, kFixtureAnchor) == 118);
}
