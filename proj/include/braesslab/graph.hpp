#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace braesslab {

using Vertex = int;

// Unordered pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable value type: every
// construction returns a new graph. Edges are kept sorted, so two graphs
// compare equal iff they have the same labelled edge set.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidParameter on self-loops, duplicates or out-of-range ids.
  // Edges may be given in any order and orientation.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::vector<std::pair<Vertex, Vertex>>(edges)) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // New graph with the extra edge; throws if it already exists.
  Graph with_edge(Vertex a, Vertex b) const;

  // All unordered non-adjacent pairs, lexicographic.
  std::vector<Edge> non_edges() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  std::size_t hash() const noexcept;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept { return g.hash(); }
};

enum class FamilyKind { complete, cycle, path, star, broom };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

// Canonical labellings:
//   path   P_n = (0, 1, ..., n-1)
//   cycle  C_n = (0, 1, ..., n-1, 0)
//   star   S_n has its centre at n-1
//   broom  B_{n,alpha}: handle 0-1-...-alpha, bristles alpha+1..n-1 all
//          adjacent to alpha-1, so vertex 0 is the far pendent vertex.
// `alpha` is only read for brooms.
Graph make_family(FamilyKind kind, int n, int alpha = 0);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph broom_graph(int n, int alpha);

// Triangle 0-1-2 with pendent vertex 3 on 1; vertex 0 is the distinguished w.
Graph triangle_with_pendent();

struct IdentifyResult {
  Graph graph;
  // Image of each vertex of the second graph in the result.
  std::vector<Vertex> second_map;
};

// 1-sum: g1 keeps its labels, g2's vertices are appended in order with v2
// mapped onto v1.
IdentifyResult identify(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

struct TwinPathSpec {
  Vertex v = 0;
  int k1 = 0;
  int k2 = 0;

  int cycle_length() const noexcept { return k1 + k2 + 1; }
};

// Throws InvalidParameter unless k1, k2 >= 0 and k1 + k2 >= 2.
void validate(const TwinPathSpec& spec);

struct TwinPathGraph {
  Graph graph;
  Vertex tip1 = 0;  // == v when k1 == 0
  Vertex tip2 = 0;  // == v when k2 == 0
};

// Attaches paths of lengths k1 and k2 at v. New vertices are appended: first
// the k1 vertices of the first path walking away from v, then the k2 vertices
// of the second.
TwinPathGraph attach_twin_paths(const Graph& g, const TwinPathSpec& spec);

// Inserts the tip-tip edge. Throws if the tips coincide or are adjacent.
Graph close_twin_paths(const Graph& g_tilde, std::pair<Vertex, Vertex> tips);

std::vector<int> degree_vector(const Graph& g);

// BFS distances from v; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cut_vertex(const Graph& g, Vertex v);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

// Throws DisconnectedGraph naming the components.
void require_connected(const Graph& g, const std::string& context);

int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);

struct Branch {
  std::vector<Vertex> vertices;  // sorted, includes the anchor
  int size = 0;                  // |vertices|
  int eccentricity = 0;          // eccentricity of the anchor inside the branch
};

struct BranchProfile {
  Vertex anchor = 0;
  std::vector<Branch> branches;
};

// One branch per component of G - v, each together with v. A graph where v is
// not a cut vertex yields a single branch; the trivial graph yields none.
BranchProfile branches_at(const Graph& g, Vertex v);

// Subgraph induced by `vertices`, relabelled in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

// Edge-list text format: '#' comment lines, then n, then one "u v" per line
// with 0 <= u < v < n. Blank lines are ignored. Duplicates are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace braesslab

template <>
struct std::hash<braesslab::Graph> {
  std::size_t operator()(const braesslab::Graph& g) const noexcept { return g.hash(); }
};
