#include "braesslab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/parallel.hpp"

namespace braesslab {

std::string to_string(VertexPolicy policy) {
  switch (policy) {
    case VertexPolicy::fixed: return "fixed";
    case VertexPolicy::pendent: return "pendent";
    case VertexPolicy::centre: return "centre";
    case VertexPolicy::custom: return "custom";
  }
  return "?";
}

VertexPolicy parse_vertex_policy(const std::string& name) {
  if (name == "fixed") return VertexPolicy::fixed;
  if (name == "pendent" || name == "pendant") return VertexPolicy::pendent;
  if (name == "centre" || name == "center") return VertexPolicy::centre;
  throw InvalidParameter("unknown vertex policy '" + name + "' (expected fixed, pendent or centre)");
}

std::string to_string(Trend trend) {
  switch (trend) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::flat: return "flat";
    case Trend::mixed: return "mixed";
  }
  return "?";
}

FamilySpec FamilySpec::builtin(FamilyKind kind, VertexPolicy policy, Vertex fixed_vertex) {
  if (policy == VertexPolicy::custom) throw InvalidParameter("custom vertex policy needs a custom generator");
  FamilySpec f;
  f.kind = kind;
  f.policy = policy;
  f.fixed_vertex = fixed_vertex;
  return f;
}

FamilySpec FamilySpec::broom(BroomAlphaRule rule, int alpha, VertexPolicy policy) {
  FamilySpec f = builtin(FamilyKind::broom, policy);
  f.alpha_rule = rule;
  f.alpha = alpha;
  if (rule == BroomAlphaRule::fixed && alpha < 1) throw InvalidParameter("broom handle length must be >= 1");
  return f;
}

FamilySpec FamilySpec::custom(std::function<FamilyMember(int)> generator, int first_order) {
  if (!generator) throw InvalidParameter("custom family without a generator");
  FamilySpec f;
  f.policy = VertexPolicy::custom;
  f.generator = std::move(generator);
  f.first_order = first_order;
  return f;
}

FamilySpec FamilySpec::with_default_policy(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete:
    case FamilyKind::cycle: return builtin(kind, VertexPolicy::fixed, 0);
    case FamilyKind::broom: return broom(BroomAlphaRule::fixed, 2);
    default: return builtin(kind, VertexPolicy::pendent);
  }
}

int FamilySpec::min_order() const {
  if (!kind) return std::max(2, first_order);
  int base = 2;
  switch (*kind) {
    case FamilyKind::cycle: base = 3; break;
    case FamilyKind::broom: base = alpha_rule == BroomAlphaRule::fixed ? std::max(2, alpha + 1) : 2; break;
    default: break;
  }
  if (policy == VertexPolicy::fixed) base = std::max(base, fixed_vertex + 1);
  return base;
}

int FamilySpec::alpha_for(int n) const {
  if (alpha_rule == BroomAlphaRule::fixed) return alpha;
  int a = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (a * a > n) --a;
  while ((a + 1) * (a + 1) <= n) ++a;
  return a;
}

namespace {

Vertex pick_vertex(const Graph& g, VertexPolicy policy, Vertex fixed) {
  switch (policy) {
    case VertexPolicy::fixed:
      if (!g.has_vertex(fixed)) throw InvalidParameter("fixed vertex " + std::to_string(fixed) + " out of range");
      return fixed;
    case VertexPolicy::pendent:
      for (Vertex x = 0; x < g.order(); ++x)
        if (g.degree(x) == 1) return x;
      throw InvalidParameter("graph has no pendent vertex");
    case VertexPolicy::centre: {
      Vertex best = 0;
      int best_ecc = eccentricity(g, 0);
      for (Vertex x = 1; x < g.order(); ++x) {
        const int e = eccentricity(g, x);
        if (e < best_ecc) {
          best = x;
          best_ecc = e;
        }
      }
      return best;
    }
    case VertexPolicy::custom: break;
  }
  throw InvalidParameter("vertex policy needs a custom generator");
}

}  // namespace

FamilyMember FamilySpec::member(int n) const {
  if (n < min_order())
    throw InvalidParameter(describe() + ": order " + std::to_string(n) + " below minimum " + std::to_string(min_order()));
  if (!kind) {
    FamilyMember m = generator(n);
    if (m.graph.order() != n || !m.graph.has_vertex(m.v) || !is_connected(m.graph))
      throw InvalidParameter("custom family generator returned an invalid member for n=" + std::to_string(n));
    return m;
  }
  Graph g = make_family(*kind, n, *kind == FamilyKind::broom ? alpha_for(n) : 0);
  const Vertex v = pick_vertex(g, policy, fixed_vertex);
  return {std::move(g), v};
}

std::string FamilySpec::describe() const {
  if (!kind) return "custom";
  std::string s = to_string(*kind);
  if (*kind == FamilyKind::broom)
    s += alpha_rule == BroomAlphaRule::fixed ? "(alpha=" + std::to_string(alpha) + ")" : "(alpha=floor(sqrt(n)))";
  s += "/" + to_string(policy);
  if (policy == VertexPolicy::fixed) s += "(" + std::to_string(fixed_vertex) + ")";
  return s;
}

Rational ratio(const Graph& g, Vertex v) {
  if (g.order() < 2) throw InvalidParameter("ratio: graph needs at least 2 vertices");
  const auto moment = anchored_moment(g, v);
  const Rational m = g.size();
  Rational r = moment.dqd_over_tau / (2 * m * m);
  r.canonicalize();
  return r;
}

RatioSeries ratio_series(const FamilySpec& fam, int n_min, int n_max, const std::vector<KPair>& pairs,
                         unsigned threads) {
  for (const auto& p : pairs) validate(TwinPathSpec{0, p.k1, p.k2});
  RatioSeries out;
  out.pairs = pairs;
  const int lo = std::max(n_min, fam.min_order());
  if (n_max < lo) return out;
  out.points.resize(static_cast<std::size_t>(n_max - lo + 1));
  parallel_for(out.points.size(), threads, [&](std::size_t i) {
    const int n = lo + static_cast<int>(i);
    const auto member = fam.member(n);
    const auto moment = anchored_moment(member.graph, member.v);
    const Rational m = member.graph.size();
    RatioPoint point;
    point.n = n;
    point.ratio = moment.dqd_over_tau / (2 * m * m);
    point.ratio.canonicalize();
    for (const auto& p : pairs)
      point.phis.push_back(assemble_phi(member.v, p.k1, p.k2, 2 * moment.dqd, member.graph.size(), moment.tau));
    out.points[i] = std::move(point);
  });
  return out;
}

ThresholdReport threshold_scan(const FamilySpec& fam, int k1, int k2, int n_min, int n_max, unsigned threads) {
  ThresholdReport out;
  out.pair = {k1, k2};
  out.n_min = std::max(n_min, fam.min_order());
  out.n_max = n_max;
  out.always_true = k1 == 1 && k2 == 1;
  const auto series = ratio_series(fam, out.n_min, n_max, {out.pair}, threads);
  for (const auto& point : series.points) {
    const auto& b = point.phis.front();
    out.rows.push_back({point.n, b.phi, point.ratio, b.verdict, b.boundary});
    if (b.boundary) out.boundary_ns.push_back(point.n);
    if (b.verdict && !out.first_positive) out.first_positive = point.n;
  }
  std::size_t start = out.rows.size();
  while (start > 0 && out.rows[start - 1].verdict) --start;
  if (start < out.rows.size()) out.first_n_true = out.rows[start].n;
  if (out.always_true) {
    out.certified = out.first_n_true.has_value() && start == 0;
  } else if (out.first_n_true) {
    out.certified = true;
    for (std::size_t i = start + 1; i < out.rows.size(); ++i)
      if (out.rows[i].ratio < out.rows[i - 1].ratio) out.certified = false;
  }
  return out;
}

std::vector<ThresholdReport> star_pendent_thresholds(int n_max, unsigned threads) {
  const auto fam = FamilySpec::builtin(FamilyKind::star, VertexPolicy::pendent);
  const std::vector<KPair> pairs = {{1, 1}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
  std::vector<ThresholdReport> out;
  for (const auto& p : pairs) out.push_back(threshold_scan(fam, p.k1, p.k2, 2, n_max, threads));
  return out;
}

std::optional<int> known_threshold(const FamilySpec& fam, KPair pair) {
  if (!fam.kind) return std::nullopt;
  if (pair == KPair{1, 1}) return fam.min_order();
  const KPair p = pair.k1 <= pair.k2 ? pair : KPair{pair.k2, pair.k1};
  switch (*fam.kind) {
    case FamilyKind::complete:
      if (p == KPair{1, 2}) return 7;
      if (p == KPair{2, 2}) return 13;
      break;
    case FamilyKind::cycle:
      if (p == KPair{1, 2}) return 7;
      if (p == KPair{2, 2}) return 10;
      break;
    case FamilyKind::star:
      if (fam.policy != VertexPolicy::pendent) break;
      if (p == KPair{0, 2}) return 12;
      if (p == KPair{1, 2}) return 6;
      if (p == KPair{2, 2}) return 9;
      if (p == KPair{2, 3}) return 47;
      break;
    case FamilyKind::path:
      if (fam.policy == VertexPolicy::pendent && p == KPair{1, 2}) return 5;
      break;
    default: break;
  }
  return std::nullopt;
}

BigInt branch_min_dqd(const std::vector<std::pair<int, int>>& sizes_and_eccentricities) {
  BigInt total = 0;
  for (const auto& [n, e] : sizes_and_eccentricities) {
    if (e < 1 || n < e + 1)
      throw InvalidParameter("branch_min_dqd: need size >= eccentricity + 1 >= 2, got (" + std::to_string(n) + "," +
                             std::to_string(e) + ")");
    const BigInt nb = n;
    const BigInt eb = e;
    BigInt cube = eb * (2 * eb - 1) * (2 * eb + 1);
    mpz_divexact_ui(cube.get_mpz_t(), cube.get_mpz_t(), 3);
    total += (nb - eb - 1) * (4 * nb + 4 * eb - 7) + cube;
  }
  return total;
}

BigInt branch_min_dqd(const BranchProfile& profile) {
  std::vector<std::pair<int, int>> parts;
  for (const auto& b : profile.branches) parts.emplace_back(b.size, b.eccentricity);
  return branch_min_dqd(parts);
}

BigInt broom_dqd(int n, int alpha) {
  if (alpha < 1 || n <= alpha) throw InvalidParameter("broom_dqd: need n > alpha >= 1");
  const BigInt a = alpha;
  const BigInt s = n - alpha - 1;
  BigInt cube = a * (2 * a - 1) * (2 * a + 1);
  mpz_divexact_ui(cube.get_mpz_t(), cube.get_mpz_t(), 3);
  return 4 * (a - 1) * s * s + s * (4 * a * a - 3) + cube;
}

namespace {

// Recursive evaluation on vertex subsets of one fixed tree.
class TreeDecomposer {
 public:
  explicit TreeDecomposer(const Graph& t) : t_(t) {}

  // d^T Q d of the subtree spanned by `inside`, anchored at root.
  BigInt rooted(Vertex root, const std::vector<char>& inside) const {
    BigInt total = 0;
    for (Vertex u : t_.neighbours(root)) {
      if (!inside[u]) continue;
      std::vector<char> branch(inside.size(), 0);
      branch[root] = 1;
      collect(u, root, inside, branch);
      total += pendant(root, branch);
    }
    return total;
  }

  // v has exactly one neighbour inside.
  BigInt pendant(Vertex v, const std::vector<char>& inside) const {
    const auto n = inside.size();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::queue<Vertex> queue;
    dist[v] = 0;
    queue.push(v);
    Vertex far = v;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      if (dist[x] > dist[far] || (dist[x] == dist[far] && x < far)) far = x;
      for (Vertex y : t_.neighbours(x))
        if (inside[y] && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        }
    }
    const int alpha = dist[far];
    std::vector<Vertex> path(static_cast<std::size_t>(alpha) + 1);
    for (Vertex x = far; x != -1; x = parent[x]) path[dist[x]] = x;
    std::vector<char> on_path(n, 0);
    for (Vertex x : path) on_path[x] = 1;

    BigInt sub_total = 0;
    std::vector<BigInt> excess(static_cast<std::size_t>(alpha) + 1);  // n_i - 1
    for (int i = 1; i < alpha; ++i) {
      std::vector<char> hanging(n, 0);
      hanging[path[i]] = 1;
      for (Vertex y : t_.neighbours(path[i]))
        if (inside[y] && !on_path[y]) collect(y, path[i], inside, hanging);
      excess[i] = static_cast<long>(std::count(hanging.begin(), hanging.end(), 1)) - 1;
      if (excess[i] > 0) sub_total += rooted(path[i], hanging);
    }
    BigInt total = sub_total;
    BigInt tail = 0;  // s_i = sum_{j >= i} (n_j - 1)
    for (int i = alpha - 1; i >= 1; --i) {
      tail += excess[i];
      total += 4 * tail * tail + 4 * tail * (2 * (alpha - i) + 1);
    }
    BigInt a = alpha;
    BigInt cube = a * (2 * a - 1) * (2 * a + 1);
    mpz_divexact_ui(cube.get_mpz_t(), cube.get_mpz_t(), 3);
    return total + cube;
  }

 private:
  // Marks everything reachable from start inside `inside` without passing `block`.
  void collect(Vertex start, Vertex block, const std::vector<char>& inside, std::vector<char>& mark) const {
    std::vector<Vertex> stack{start};
    mark[start] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : t_.neighbours(x))
        if (y != block && inside[y] && !mark[y]) {
          mark[y] = 1;
          stack.push_back(y);
        }
    }
  }

  const Graph& t_;
};

void require_tree(const Graph& t, Vertex v, const char* context) {
  if (!is_tree(t)) throw InvalidParameter(std::string(context) + ": graph is not a tree");
  if (!t.has_vertex(v)) throw InvalidParameter(std::string(context) + ": invalid vertex");
}

}  // namespace

BigInt pendant_decomposition_dqd(const Graph& t, Vertex v) {
  require_tree(t, v, "pendant_decomposition_dqd");
  if (t.degree(v) != 1) throw InvalidParameter("pendant_decomposition_dqd: vertex " + std::to_string(v) + " is not pendent");
  std::vector<char> all(static_cast<std::size_t>(t.order()), 1);
  return TreeDecomposer(t).pendant(v, all);
}

BigInt tree_dqd(const Graph& t, Vertex v) {
  require_tree(t, v, "tree_dqd");
  std::vector<char> all(static_cast<std::size_t>(t.order()), 1);
  return TreeDecomposer(t).rooted(v, all);
}

bool is_minimal_broom_configuration(const Graph& t, Vertex v) {
  require_tree(t, v, "is_minimal_broom_configuration");
  const auto dist = distances_from(t, v);
  for (const auto& branch : branches_at(t, v).branches) {
    std::map<int, int> level_size;
    for (Vertex x : branch.vertices) ++level_size[dist[x]];
    for (const auto& [level, count] : level_size)
      if ((level == 1 || level >= 3) && count != 1) return false;
  }
  return true;
}

BigInt pn_dqd(int n, Vertex v) {
  if (n < 2 || v < 0 || v >= n) throw InvalidParameter("pn_dqd: need n >= 2 and 0 <= v < n");
  // The closed form is stated for 1-based positions.
  const BigInt p = v + 1;
  const BigInt nb = n;
  BigInt cubic = 4 * nb * nb * nb - nb - 3;
  mpz_divexact_ui(cubic.get_mpz_t(), cubic.get_mpz_t(), 3);
  return 4 * (nb - 1) * p * p - 4 * (nb * nb - 1) * p + cubic;
}

PathExtrema pn_dqd_extrema(int n) {
  if (n < 2) throw InvalidParameter("pn_dqd_extrema: need n >= 2");
  PathExtrema out;
  for (Vertex v = 0; v < n; ++v) {
    const BigInt value = pn_dqd(n, v);
    if (v == 0 || value < out.min) {
      out.min = value;
      out.argmin = {v};
    } else if (value == out.min) {
      out.argmin.push_back(v);
    }
    if (v == 0 || value > out.max) {
      out.max = value;
      out.argmax = {v};
    } else if (value == out.max) {
      out.argmax.push_back(v);
    }
  }
  return out;
}

namespace {

// cmp(i) is the sign of value[i+1] - value[i].
template <class Cmp>
Trend classify(std::size_t steps, Cmp cmp) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i < steps; ++i) {
    const int c = cmp(i);
    up = up || c > 0;
    down = down || c < 0;
  }
  if (up && down) return Trend::mixed;
  if (up) return Trend::increasing;
  if (down) return Trend::decreasing;
  return Trend::flat;
}

int compare_alpha_n23(const SequenceRow& a, const SequenceRow& b) {
  // alpha_b / b^{2/3} vs alpha_a / a^{2/3}  <=>  alpha_b^3 a^2 vs alpha_a^3 b^2
  const BigInt lhs = BigInt(b.alpha) * b.alpha * b.alpha * a.n * a.n;
  const BigInt rhs = BigInt(a.alpha) * a.alpha * a.alpha * b.n * b.n;
  return sgn(BigInt(lhs - rhs));
}

Rational beta_alpha3_over_n2(const SequenceRow& r) {
  Rational x(BigInt(r.beta) * r.alpha * r.alpha * r.alpha, BigInt(r.n) * r.n);
  x.canonicalize();
  return x;
}

}  // namespace

SequenceDescriptor sequence_profile(const FamilySpec& fam, int n_min, int n_max, const Rational& cutoff) {
  if (sgn(cutoff) <= 0 || cutoff > 1) throw InvalidParameter("sequence_profile: cutoff must lie in (0, 1]");
  SequenceDescriptor out;
  out.cutoff = cutoff;
  for (int n = std::max(n_min, fam.min_order()); n <= n_max; ++n) {
    const auto member = fam.member(n);
    const auto profile = branches_at(member.graph, member.v);
    SequenceRow row;
    row.n = n;
    row.alpha = eccentricity(member.graph, member.v);
    row.ell = static_cast<int>(profile.branches.size());
    for (const auto& b : profile.branches)
      if (Rational(b.eccentricity) >= cutoff * row.alpha) ++row.beta;
    out.rows.push_back(row);
  }
  const auto& rows = out.rows;
  if (rows.size() < 2) return out;
  const std::size_t steps = rows.size() - 1;
  out.beta_alpha3_over_n2 = classify(steps, [&](std::size_t i) {
    return cmp(beta_alpha3_over_n2(rows[i + 1]), beta_alpha3_over_n2(rows[i]));
  });
  out.alpha_over_n23 = classify(steps, [&](std::size_t i) { return compare_alpha_n23(rows[i], rows[i + 1]); });
  const int net = cmp(beta_alpha3_over_n2(rows.back()), beta_alpha3_over_n2(rows.front()));
  out.beta_alpha3_over_n2_net = net > 0 ? 1 : (net < 0 ? -1 : 0);
  out.alpha_over_n23_net = compare_alpha_n23(rows.front(), rows.back());
  return out;
}

AugmentResult augment_until_paradoxical(const Graph& h, Vertex w, const FamilySpec& fam, int k1, int k2, int n_max) {
  validate(TwinPathSpec{w, k1, k2});
  require_connected(h, "augment_until_paradoxical");
  if (!h.has_vertex(w)) throw InvalidParameter("augment_until_paradoxical: invalid vertex");
  AugmentResult out;
  for (int n = fam.min_order(); n <= n_max; ++n) {
    const auto member = fam.member(n);
    auto glued = identify(h, w, member.graph, member.v);
    auto b = big_phi(glued.graph, w, k1, k2);
    out.tried.emplace_back(n, b);
    if (b.verdict) {
      out.found = true;
      out.n_attach = n;
      out.graph = std::move(glued.graph);
      out.v = w;
      out.breakdown = std::move(b);
      return out;
    }
  }
  return out;
}

}  // namespace braesslab
