#include "braesslab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "braesslab/errors.hpp"

namespace braesslab {

namespace {

std::vector<Edge> normalise(int n, std::vector<Edge> edges) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw InvalidParameter("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " out of range for n=" + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw InvalidParameter("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  return edges;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Graph(n, [&] {
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (auto [a, b] : edges) es.push_back({a, b});
        return es;
      }()) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(normalise(n, std::move(edges))) {
  adj_.resize(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  if (has_edge(a, b)) throw InvalidParameter("edge already present");
  auto es = edges_;
  es.push_back({a, b});
  return Graph(n_, std::move(es));
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b)
      if (!has_edge(a, b)) out.push_back({a, b});
  return out;
}

std::size_t Graph::hash() const noexcept {
  std::size_t h = std::hash<int>{}(n_);
  for (const auto& e : edges_) {
    const std::size_t x = (static_cast<std::size_t>(e.u) << 32) ^ static_cast<std::size_t>(e.v);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::broom: return "broom";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto k : {FamilyKind::complete, FamilyKind::cycle, FamilyKind::path, FamilyKind::star, FamilyKind::broom})
    if (to_string(k) == name) return k;
  throw InvalidParameter("unknown family '" + name + "'");
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.push_back({a, b});
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int a = 0; a + 1 < n; ++a) es.push_back({a, a + 1});
  es.push_back({0, n - 1});
  return Graph(n, std::move(es));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidParameter("path needs n >= 1");
  std::vector<Edge> es;
  for (int a = 0; a + 1 < n; ++a) es.push_back({a, a + 1});
  return Graph(n, std::move(es));
}

Graph star_graph(int n) {
  if (n < 1) throw InvalidParameter("star needs n >= 1");
  std::vector<Edge> es;
  for (int a = 0; a + 1 < n; ++a) es.push_back({a, n - 1});
  return Graph(n, std::move(es));
}

Graph broom_graph(int n, int alpha) {
  if (alpha < 1 || n <= alpha)
    throw InvalidParameter("broom needs n > alpha >= 1 (got n=" + std::to_string(n) +
                           ", alpha=" + std::to_string(alpha) + ")");
  std::vector<Edge> es;
  for (int a = 0; a < alpha; ++a) es.push_back({a, a + 1});
  for (int b = alpha + 1; b < n; ++b) es.push_back({alpha - 1, b});
  return Graph(n, std::move(es));
}

Graph make_family(FamilyKind kind, int n, int alpha) {
  switch (kind) {
    case FamilyKind::complete: return complete_graph(n);
    case FamilyKind::cycle: return cycle_graph(n);
    case FamilyKind::path: return path_graph(n);
    case FamilyKind::star: return star_graph(n);
    case FamilyKind::broom: return broom_graph(n, alpha);
  }
  throw InvalidParameter("unknown family");
}

Graph triangle_with_pendent() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}); }

IdentifyResult identify(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (!g1.has_vertex(v1) || !g2.has_vertex(v2)) throw InvalidParameter("identify: invalid vertex");
  const int n1 = g1.order();
  std::vector<Vertex> map(static_cast<std::size_t>(g2.order()));
  Vertex next = n1;
  for (Vertex x = 0; x < g2.order(); ++x) map[x] = (x == v2) ? v1 : next++;
  std::vector<Edge> es = g1.edges();
  for (const auto& e : g2.edges()) es.push_back({map[e.u], map[e.v]});
  return {Graph(n1 + g2.order() - 1, std::move(es)), std::move(map)};
}

void validate(const TwinPathSpec& spec) {
  if (spec.k1 < 0 || spec.k2 < 0 || spec.k1 + spec.k2 < 2)
    throw InvalidParameter("twin paths need k1, k2 >= 0 and k1 + k2 >= 2 (got " + std::to_string(spec.k1) +
                           ", " + std::to_string(spec.k2) + ")");
}

TwinPathGraph attach_twin_paths(const Graph& g, const TwinPathSpec& spec) {
  validate(spec);
  if (!g.has_vertex(spec.v)) throw InvalidParameter("attach_twin_paths: invalid vertex");
  std::vector<Edge> es = g.edges();
  Vertex next = g.order();
  auto grow = [&](int len) {
    Vertex prev = spec.v;
    for (int i = 0; i < len; ++i) {
      es.push_back({prev, next});
      prev = next++;
    }
    return prev;
  };
  const Vertex tip1 = grow(spec.k1);
  const Vertex tip2 = grow(spec.k2);
  return {Graph(next, std::move(es)), tip1, tip2};
}

Graph close_twin_paths(const Graph& g_tilde, std::pair<Vertex, Vertex> tips) {
  auto [a, b] = tips;
  if (!g_tilde.has_vertex(a) || !g_tilde.has_vertex(b)) throw InvalidParameter("close_twin_paths: invalid tip");
  if (a == b) throw InvalidParameter("close_twin_paths: tips coincide");
  if (g_tilde.has_edge(a, b)) throw InvalidParameter("close_twin_paths: tips already adjacent");
  return g_tilde.with_edge(a, b);
}

std::vector<int> degree_vector(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

std::vector<int> distances_from(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("invalid vertex " + std::to_string(v));
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbours(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    const auto dist = distances_from(g, s);
    for (Vertex x = 0; x < g.order(); ++x)
      if (dist[x] >= 0) {
        comp.push_back(x);
        seen[x] = 1;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

void require_connected(const Graph& g, const std::string& context) {
  if (g.order() == 0) throw InvalidParameter(context + ": empty graph");
  if (is_connected(g)) return;
  std::ostringstream msg;
  msg << context << ": graph is disconnected; components";
  for (const auto& comp : components(g)) {
    msg << " {";
    for (std::size_t i = 0; i < comp.size(); ++i) msg << (i ? "," : "") << comp[i];
    msg << "}";
  }
  throw DisconnectedGraph(msg.str());
}

bool is_cut_vertex(const Graph& g, Vertex v) { return branches_at(g, v).branches.size() >= 2; }

int eccentricity(const Graph& g, Vertex v) {
  require_connected(g, "eccentricity");
  const auto dist = distances_from(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

int diameter(const Graph& g) {
  require_connected(g, "diameter");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0) es.push_back({local[e.u], local[e.v]});
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

BranchProfile branches_at(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InvalidParameter("branches_at: invalid vertex");
  BranchProfile profile{v, {}};
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  label[v] = -2;
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    std::queue<Vertex> q;
    label[s] = count;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbours(x))
        if (label[y] == -1) {
          label[y] = count;
          q.push(y);
        }
    }
    ++count;
  }
  for (int c = 0; c < count; ++c) {
    Branch b;
    for (Vertex x = 0; x < g.order(); ++x)
      if (label[x] == c || x == v) b.vertices.push_back(x);
    b.size = static_cast<int>(b.vertices.size());
    const Graph sub = induced_subgraph(g, b.vertices);
    const auto pos = std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin();
    const auto dist = distances_from(sub, static_cast<Vertex>(pos));
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
      throw DisconnectedGraph("branches_at: component not attached to the anchor vertex");
    b.eccentricity = *std::max_element(dist.begin(), dist.end());
    profile.branches.push_back(std::move(b));
  }
  return profile;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto is_blank = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    if (is_blank(line)) continue;
    std::istringstream ss(line);
    if (n < 0) {
      long long value = 0;
      std::string rest;
      if (!(ss >> value) || (ss >> rest)) throw ParseError("expected a single vertex count", lineno);
      if (value < 0 || value > 1'000'000) throw ParseError("vertex count out of range", lineno);
      n = static_cast<int>(value);
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest)) throw ParseError("expected \"u v\"", lineno);
    if (u < 0 || v >= n || u >= v)
      throw ParseError("edge must satisfy 0 <= u < v < n (n=" + std::to_string(n) + ")", lineno);
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing vertex count", 0);
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace braesslab
