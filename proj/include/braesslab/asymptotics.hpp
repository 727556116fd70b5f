#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braesslab/braess.hpp"
#include "braesslab/exact.hpp"
#include "braesslab/graph.hpp"

namespace braesslab {

// How the specified vertex of each family member is chosen.
//   fixed    the same id for every n
//   pendent  smallest-id vertex of degree 1
//   centre   smallest-id vertex of minimum eccentricity
//   custom   whatever the generator returns
enum class VertexPolicy { fixed, pendent, centre, custom };

std::string to_string(VertexPolicy policy);
VertexPolicy parse_vertex_policy(const std::string& name);

// Broom handle length per order: a constant, or floor(sqrt(n)).
enum class BroomAlphaRule { fixed, floor_sqrt };

struct FamilyMember {
  Graph graph;
  Vertex v = 0;
};

// A sequence (G_n, v). Built-in kinds use make_family; a custom family supplies
// its own generator and has kind == std::nullopt.
struct FamilySpec {
  std::optional<FamilyKind> kind;
  VertexPolicy policy = VertexPolicy::fixed;
  Vertex fixed_vertex = 0;
  BroomAlphaRule alpha_rule = BroomAlphaRule::fixed;
  int alpha = 1;
  std::function<FamilyMember(int)> generator;
  int first_order = 0;  // custom families only; 0 means 2

  static FamilySpec builtin(FamilyKind kind, VertexPolicy policy, Vertex fixed_vertex = 0);
  static FamilySpec broom(BroomAlphaRule rule, int alpha = 1, VertexPolicy policy = VertexPolicy::pendent);
  static FamilySpec custom(std::function<FamilyMember(int)> generator, int first_order = 2);

  // Default policies: complete and cycle fixed at 0, the trees pendent.
  static FamilySpec with_default_policy(FamilyKind kind);

  // Smallest order with a valid member of order >= 2.
  int min_order() const;
  int alpha_for(int n) const;
  FamilyMember member(int n) const;
  std::string describe() const;
};

// phi_G(v) / (4 m^2 tau), exact.
Rational ratio(const Graph& g, Vertex v);

struct KPair {
  int k1 = 0;
  int k2 = 0;
  auto operator<=>(const KPair&) const = default;
};

struct RatioPoint {
  int n = 0;
  Rational ratio;
  std::vector<PhiBreakdown> phis;  // one per requested pair, same order
};

struct RatioSeries {
  std::vector<KPair> pairs;
  std::vector<RatioPoint> points;  // ascending n
};

RatioSeries ratio_series(const FamilySpec& fam, int n_min, int n_max, const std::vector<KPair>& pairs = {},
                         unsigned threads = 1);

struct ThresholdRow {
  int n = 0;
  Rational phi;
  Rational ratio;
  bool verdict = false;
  bool boundary = false;
};

struct ThresholdReport {
  KPair pair;
  int n_min = 0;
  int n_max = 0;
  std::vector<ThresholdRow> rows;
  // Start of the final run of positive verdicts that reaches n_max.
  std::optional<int> first_n_true;
  // Smallest tested n with a positive verdict (may precede first_n_true).
  std::optional<int> first_positive;
  std::vector<int> boundary_ns;  // n with Phi == 0
  // The ratio is non-decreasing from first_n_true to n_max, so the monotone
  // criterion extends the verdict over the tested tail. (1,1) is always true
  // and certified without the ratio argument.
  bool certified = false;
  bool always_true = false;  // the (1,1) case
};

ThresholdReport threshold_scan(const FamilySpec& fam, int k1, int k2, int n_min, int n_max, unsigned threads = 1);

// The eight star-at-pendent pairs, scanned over 2..n_max.
std::vector<ThresholdReport> star_pendent_thresholds(int n_max = 60, unsigned threads = 1);

// Published threshold for a built-in family at the given pair, if any.
std::optional<int> known_threshold(const FamilySpec& fam, KPair pair);

// Tree machinery. All values are d^T Q_{T,v} d.

// Lower bound for trees with the given branch profile at v.
BigInt branch_min_dqd(const std::vector<std::pair<int, int>>& sizes_and_eccentricities);
BigInt branch_min_dqd(const BranchProfile& profile);

// Broom with the make_family labelling, at v = 0.
BigInt broom_dqd(int n, int alpha);

// Splits a tree along a longest path from the pendent vertex v and recurses
// into the hanging subtrees. Throws InvalidParameter unless t is a tree and
// v is pendent.
BigInt pendant_decomposition_dqd(const Graph& t, Vertex v);

// Same recursion for any vertex of a tree, summing over branches.
BigInt tree_dqd(const Graph& t, Vertex v);

// True when every branch at v is a broom whose bristles share v's neighbour,
// i.e. the configurations that attain branch_min_dqd.
bool is_minimal_broom_configuration(const Graph& t, Vertex v);

// Path P_n at 0-based v, closed form.
BigInt pn_dqd(int n, Vertex v);

struct PathExtrema {
  BigInt min;
  std::vector<Vertex> argmin;
  BigInt max;
  std::vector<Vertex> argmax;
};

PathExtrema pn_dqd_extrema(int n);

enum class Trend { increasing, decreasing, flat, mixed };
std::string to_string(Trend trend);

struct SequenceRow {
  int n = 0;
  int alpha = 0;  // eccentricity of v
  int ell = 0;    // branches at v
  int beta = 0;   // branches with eccentricity >= cutoff * alpha
};

struct SequenceDescriptor {
  Rational cutoff;
  std::vector<SequenceRow> rows;
  // Step-by-step trends over consecutive n, compared exactly.
  Trend beta_alpha3_over_n2 = Trend::flat;
  Trend alpha_over_n23 = Trend::flat;
  // Sign of last minus first value: +1, 0 or -1.
  int beta_alpha3_over_n2_net = 0;
  int alpha_over_n23_net = 0;
};

// cutoff in (0, 1]; beta counts branches with e_i >= cutoff * alpha, a
// finite stand-in for "e_i comparable to alpha".
SequenceDescriptor sequence_profile(const FamilySpec& fam, int n_min, int n_max, const Rational& cutoff = Rational(1, 2));

struct AugmentResult {
  bool found = false;
  int n_attach = 0;  // order of the family member glued on
  Graph graph;
  Vertex v = 0;  // the glued vertex
  std::optional<PhiBreakdown> breakdown;
  std::vector<std::pair<int, PhiBreakdown>> tried;
};

// Glues w of h onto the specified vertex of the family member of order n, for
// n from the family's first order up to n_max, and stops at the first
// composite that is (v, k1, k2)-paradoxical.
AugmentResult augment_until_paradoxical(const Graph& h, Vertex w, const FamilySpec& fam, int k1, int k2, int n_max);

}  // namespace braesslab
