#include <doctest.h>

#include "braesslab/asymptotics.hpp"
#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/oracle.hpp"
#include "fixtures.hpp"

using namespace braesslab;

namespace {

BigInt direct_dqd(const Graph& g, Vertex v) { return fixtures::quadratic_form(g, q_matrix(g, v).q); }

bool is_star_centre(const Graph& t, Vertex v) { return t.degree(v) == t.order() - 1; }

}  // namespace

TEST_CASE("vertex policies") {
  const auto star = FamilySpec::with_default_policy(FamilyKind::star);
  CHECK(star.member(5).v == 0);
  const auto centre = FamilySpec::builtin(FamilyKind::star, VertexPolicy::centre);
  CHECK(centre.member(5).v == 4);
  const auto path_centre = FamilySpec::builtin(FamilyKind::path, VertexPolicy::centre);
  CHECK(path_centre.member(6).v == 2);
  CHECK(FamilySpec::with_default_policy(FamilyKind::cycle).min_order() == 3);
  const auto broom = FamilySpec::broom(BroomAlphaRule::floor_sqrt);
  CHECK(broom.alpha_for(17) == 4);
  CHECK(broom.member(17).graph.order() == 17);
  CHECK(parse_vertex_policy("centre") == VertexPolicy::centre);
  CHECK_THROWS_AS(parse_vertex_policy("middle"), InvalidParameter);
  CHECK_THROWS_AS(FamilySpec::builtin(FamilyKind::path, VertexPolicy::pendent).member(1), InvalidParameter);
}

TEST_CASE("stated thresholds") {
  auto first = [](const FamilySpec& fam, int k1, int k2, int n_max) {
    return threshold_scan(fam, k1, k2, fam.min_order(), n_max).first_n_true;
  };
  const auto complete = FamilySpec::with_default_policy(FamilyKind::complete);
  const auto cycle = FamilySpec::with_default_policy(FamilyKind::cycle);
  const auto star = FamilySpec::with_default_policy(FamilyKind::star);
  CHECK(first(complete, 1, 2, 20) == 7);
  CHECK(first(complete, 2, 2, 20) == 13);
  CHECK(first(cycle, 1, 2, 20) == 7);
  CHECK(first(cycle, 2, 2, 20) == 10);
  CHECK(first(star, 1, 1, 10) == 2);
  CHECK(first(star, 0, 2, 20) == 12);
  CHECK(first(star, 1, 2, 20) == 6);
  CHECK(first(star, 2, 2, 20) == 9);

  const auto c12 = threshold_scan(cycle, 1, 2, 3, 20);
  CHECK(c12.boundary_ns == std::vector<int>{6});
  CHECK(c12.certified);
  const auto c22 = threshold_scan(cycle, 2, 2, 3, 20);
  CHECK(c22.boundary_ns == std::vector<int>{9});

  CHECK(known_threshold(star, {2, 3}) == 47);
  CHECK(known_threshold(cycle, {1, 2}) == 7);
  CHECK(known_threshold(star, {1, 1}) == 2);
  CHECK_FALSE(known_threshold(FamilySpec::broom(BroomAlphaRule::fixed, 2), {1, 2}).has_value());
}

TEST_CASE("star pendent table") {
  const auto reports = star_pendent_thresholds(60);
  REQUIRE(reports.size() == 8);
  for (const auto& r : reports) {
    const auto expected = known_threshold(FamilySpec::with_default_policy(FamilyKind::star), r.pair);
    REQUIRE(expected.has_value());
    CHECK(r.first_n_true == expected);
    CHECK(r.certified);
  }
}

TEST_CASE("path pendent threshold") {
  const auto path = FamilySpec::with_default_policy(FamilyKind::path);
  CHECK(threshold_scan(path, 1, 2, 2, 30).first_n_true == 5);
}

TEST_CASE("ratio trends") {
  const auto complete = FamilySpec::with_default_policy(FamilyKind::complete);
  const auto series = ratio_series(complete, 5, 20);
  for (std::size_t i = 1; i < series.points.size(); ++i) CHECK(series.points[i].ratio < series.points[i - 1].ratio);

  const auto cycle = ratio_series(FamilySpec::with_default_policy(FamilyKind::cycle), 5, 40, {{1, 2}}, 2);
  for (std::size_t i = 1; i < cycle.points.size(); ++i) CHECK(cycle.points[i].ratio > cycle.points[i - 1].ratio);
  REQUIRE(cycle.points.front().phis.size() == 1);
  CHECK(cycle.points.front().phis.front().k1 == 1);

  const auto star = ratio_series(FamilySpec::with_default_policy(FamilyKind::star), 20, 60);
  for (std::size_t i = 1; i < star.points.size(); ++i) {
    CHECK(star.points[i].ratio > star.points[i - 1].ratio);
    CHECK(star.points[i].ratio < 2);
  }
  CHECK(ratio(star_graph(4), 0) == Rational(3, 2));
}

TEST_CASE("ratio series is thread independent") {
  const auto fam = FamilySpec::broom(BroomAlphaRule::floor_sqrt);
  const auto a = ratio_series(fam, 4, 24, {{1, 2}, {2, 2}}, 1);
  const auto b = ratio_series(fam, 4, 24, {{1, 2}, {2, 2}}, 3);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].n == b.points[i].n);
    CHECK(a.points[i].ratio == b.points[i].ratio);
    CHECK(a.points[i].phis[1].phi == b.points[i].phis[1].phi);
  }
}

TEST_CASE("path moments") {
  for (int n = 2; n <= 20; ++n) {
    for (Vertex v = 0; v < n; ++v) CHECK(pn_dqd(n, v) == anchored_moment(path_graph(n), v).dqd);
    const auto ex = pn_dqd_extrema(n);
    const BigInt N = n;
    if (n % 2 == 1)
      CHECK(3 * ex.min == N * (N - 1) * (N - 2));
    else
      CHECK(3 * ex.min == N * N * N - 3 * N * N + 5 * N - 3);
    CHECK(3 * ex.max == (N - 1) * (2 * N - 1) * (2 * N - 3));
    CHECK(ex.argmax == std::vector<Vertex>{0, n - 1});
  }
  CHECK(pn_dqd(6, 0) == 165);
}

TEST_CASE("lower bound n - 1 with equality only at star centres") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : oracle::tree_catalogue(n))
      for (Vertex v = 0; v < n; ++v) {
        const auto value = tree_dqd(t, v);
        CHECK(value >= n - 1);
        CHECK((value == n - 1) == is_star_centre(t, v));
      }
}

TEST_CASE("branch minimum is attained exactly by broom configurations") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : oracle::tree_catalogue(n))
      for (Vertex v = 0; v < n; ++v) {
        const auto bound = branch_min_dqd(branches_at(t, v));
        const auto value = direct_dqd(t, v);
        CHECK(value >= bound);
        CHECK((value == bound) == is_minimal_broom_configuration(t, v));
      }
}

TEST_CASE("pendant decomposition equals direct computation") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& t : oracle::tree_catalogue(n))
      for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) == 1) CHECK(pendant_decomposition_dqd(t, v) == anchored_moment(t, v).dqd);
        CHECK(tree_dqd(t, v) == anchored_moment(t, v).dqd);
      }
  CHECK_THROWS_AS(pendant_decomposition_dqd(star_graph(4), 3), InvalidParameter);
  CHECK_THROWS_AS(tree_dqd(cycle_graph(4), 0), InvalidParameter);
}

TEST_CASE("broom values") {
  CHECK(broom_dqd(6, 3) == 133);
  CHECK(anchored_moment(broom_graph(6, 3), 0).dqd == 133);
  CHECK(branch_min_dqd({{6, 3}}) == 93);
  for (int n = 3; n <= 14; ++n)
    for (int a = 1; a < n; ++a) {
      CHECK(broom_dqd(n, a) == anchored_moment(broom_graph(n, a), 0).dqd);
      // A single branch of eccentricity 1 exists only for n = 2.
      if (a >= 2) CHECK((broom_dqd(n, a) == branch_min_dqd({{n, a}})) == (a == 2 || n == a + 1));
    }
  CHECK_THROWS_AS(branch_min_dqd({{3, 3}}), InvalidParameter);
}

TEST_CASE("sequence descriptors") {
  const auto star = sequence_profile(FamilySpec::with_default_policy(FamilyKind::star), 3, 12);
  for (const auto& row : star.rows) {
    CHECK(row.alpha == 2);
    CHECK(row.ell == 1);
    CHECK(row.beta == 1);
  }
  CHECK(star.alpha_over_n23 == Trend::decreasing);
  const auto centre = sequence_profile(FamilySpec::builtin(FamilyKind::star, VertexPolicy::centre), 3, 12);
  for (const auto& row : centre.rows) {
    CHECK(row.alpha == 1);
    CHECK(row.ell == row.n - 1);
    CHECK(row.beta == row.n - 1);
  }
  const auto path = sequence_profile(FamilySpec::with_default_policy(FamilyKind::path), 3, 30);
  CHECK(path.rows.back().alpha == 29);
  CHECK(path.alpha_over_n23 == Trend::increasing);
  CHECK(path.beta_alpha3_over_n2 == Trend::increasing);
  const auto broom = sequence_profile(FamilySpec::broom(BroomAlphaRule::floor_sqrt), 4, 80);
  CHECK(broom.beta_alpha3_over_n2_net < 0);
}

TEST_CASE("gluing a path until paradoxical") {
  const auto h = triangle_with_pendent();
  const auto path = FamilySpec::with_default_policy(FamilyKind::path);
  const auto found = augment_until_paradoxical(h, kFixtureAnchor, path, 1, 2, 20);
  REQUIRE(found.found);
  CHECK(found.n_attach == 5);
  REQUIRE(found.breakdown.has_value());
  CHECK(found.breakdown->verdict);
  for (const auto& [n, b] : found.tried) CHECK((n == 5) == b.verdict);

  for (int n = 2; n <= 20; ++n) {
    const auto glued = identify(h, kFixtureAnchor, path_graph(n), 0);
    const BigInt N = n;
    CHECK(phi_v(glued.graph, kFixtureAnchor) == 118 + 2 * (N - 1) * (2 * N - 1) * (2 * N - 3));
  }
  const auto none = augment_until_paradoxical(h, kFixtureAnchor, path, 1, 2, 4);
  CHECK_FALSE(none.found);
  CHECK(none.tried.size() == 3);
}
