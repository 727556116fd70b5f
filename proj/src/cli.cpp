#include "braesslab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "braesslab/asymptotics.hpp"
#include "braesslab/braess.hpp"
#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/kemeny.hpp"
#include "braesslab/oracle.hpp"

namespace braesslab::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool verify = false;
  unsigned threads = 1;
  int max_n = oracle::kDefaultBound;
  std::string input;
  std::string family;
  int n = 0;
  int alpha = 2;
  std::string alpha_rule = "fixed";
  std::string policy;
  int vertex = -1;
  int k1 = -1;
  int k2 = -1;
  std::vector<std::string> pairs;
  int n_min = 0;
  int n_max = 20;
  std::string cutoff = "1/2";
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format '" + name + "'");
}

std::string fixed6(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

std::string shortest(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(17) << x;
  return s.str();
}

ordered_json rational_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}, {"float", r.get_d()}};
}

std::string rational_csv(const Rational& r) {
  return r.get_num().get_str() + "," + r.get_den().get_str() + "," + shortest(r.get_d());
}

std::string rational_text(const Rational& r) { return to_string(r) + " ≈ " + fixed6(r.get_d()); }

// Key/value pairs describing the run; printed as a header so a report can be
// reproduced. The worker count is left out because it never changes results.
using Config = std::vector<std::pair<std::string, std::string>>;

void print_header(std::ostream& out, const std::string& command, const Config& config) {
  out << "# braesslab " << command;
  for (const auto& [k, v] : config) out << ' ' << k << '=' << v;
  out << '\n';
}

ordered_json config_json(const std::string& command, const Config& config) {
  ordered_json j;
  j["command"] = command;
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}

struct Loaded {
  Graph graph;
  Config config;
};

Loaded load_graph(const Options& o) {
  Loaded l;
  if (!o.input.empty() && !o.family.empty()) throw UsageError("give either an input file or --family, not both");
  if (!o.input.empty()) {
    l.graph = read_edge_list_file(o.input);
    l.config.emplace_back("input", o.input);
  } else if (!o.family.empty()) {
    const auto kind = parse_family_kind(o.family);
    if (o.n <= 0) throw UsageError("--family needs --n");
    l.graph = make_family(kind, o.n, o.alpha);
    l.config.emplace_back("family", o.family);
    l.config.emplace_back("n", std::to_string(o.n));
    if (kind == FamilyKind::broom) l.config.emplace_back("alpha", std::to_string(o.alpha));
  } else {
    throw UsageError("no graph given: pass an edge-list file or --family/--n");
  }
  return l;
}

FamilySpec family_from(const Options& o, Config& config) {
  if (o.family.empty()) throw UsageError("--family is required");
  const auto kind = parse_family_kind(o.family);
  FamilySpec fam = FamilySpec::with_default_policy(kind);
  if (kind == FamilyKind::broom) {
    BroomAlphaRule rule;
    if (o.alpha_rule == "fixed") {
      rule = BroomAlphaRule::fixed;
    } else if (o.alpha_rule == "sqrt") {
      rule = BroomAlphaRule::floor_sqrt;
    } else {
      throw UsageError("--alpha-rule must be fixed or sqrt");
    }
    fam = FamilySpec::broom(rule, o.alpha, fam.policy);
  }
  if (!o.policy.empty()) {
    fam.policy = parse_vertex_policy(o.policy);
    if (fam.policy == VertexPolicy::fixed) fam.fixed_vertex = std::max(0, o.vertex);
  } else if (o.vertex >= 0) {
    fam.policy = VertexPolicy::fixed;
    fam.fixed_vertex = o.vertex;
  }
  config.emplace_back("family", fam.describe());
  return fam;
}

std::vector<KPair> pairs_from(const Options& o, KPair fallback) {
  std::vector<KPair> pairs;
  if (o.k1 >= 0 || o.k2 >= 0) {
    if (o.k1 < 0 || o.k2 < 0) throw UsageError("--k1 and --k2 go together");
    pairs.push_back({o.k1, o.k2});
  }
  for (const auto& text : o.pairs) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects k1,k2 but got '" + text + "'");
    try {
      pairs.push_back({std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))});
    } catch (const std::exception&) {
      throw UsageError("--pair expects k1,k2 but got '" + text + "'");
    }
  }
  if (pairs.empty() && fallback.k1 >= 0) pairs.push_back(fallback);
  for (const auto& p : pairs) validate(TwinPathSpec{0, p.k1, p.k2});
  return pairs;
}

std::string pair_text(KPair p) { return "(" + std::to_string(p.k1) + "," + std::to_string(p.k2) + ")"; }

std::string edges_text(const Graph& g) {
  std::string s;
  for (const auto& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

ordered_json edges_json(const Graph& g) {
  ordered_json a = ordered_json::array();
  for (const auto& e : g.edges()) a.push_back({e.u, e.v});
  return a;
}

// ---------------------------------------------------------------- kemeny

int cmd_kemeny(const Options& o, Format fmt, std::ostream& out) {
  auto [g, config] = load_graph(o);
  config.emplace_back("verify", o.verify ? "1" : "0");
  const auto k = kemeny_constant(g);
  const BigInt tau = tree_count(g);
  std::optional<Rational> mfpt;
  std::optional<double> spectral;
  if (o.verify) {
    if (g.order() <= kMfptMaxOrder) {
      mfpt = kemeny_mfpt(g);
      if (*mfpt != k.exact)
        throw InternalConsistency("kemeny: passage-time value " + mfpt->get_str() + " differs from " + k.exact.get_str());
    }
    spectral = kemeny_spectral(g);
    if (std::abs(*spectral - k.approx) > 1e-9 * (1 + k.approx))
      throw InternalConsistency("kemeny: spectral value " + shortest(*spectral) + " differs from " + shortest(k.approx));
  }
  switch (fmt) {
    case Format::text:
      print_header(out, "kemeny", config);
      out << "n      " << g.order() << "\nm      " << g.size() << "\ntau    " << tau << "\nkappa  "
          << rational_text(k.exact) << '\n';
      if (mfpt) out << "mfpt   " << to_string(*mfpt) << " (agrees)\n";
      if (spectral) out << "spectral " << fixed6(*spectral) << " (agrees)\n";
      break;
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("kemeny", config);
      j["n"] = g.order();
      j["m"] = g.size();
      j["tau"] = tau.get_str();
      j["kappa"] = rational_json(k.exact);
      if (mfpt) j["mfpt"] = rational_json(*mfpt);
      if (spectral) j["spectral"] = *spectral;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_header(out, "kemeny", config);
      out << "n,m,tau,kappa_num,kappa_den,kappa_float\n"
          << g.order() << ',' << g.size() << ',' << tau << ',' << rational_csv(k.exact) << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- scan-braess

int cmd_scan_braess(const Options& o, Format fmt, std::ostream& out) {
  auto [g, config] = load_graph(o);
  const auto scan = braess_scan(g, o.threads);
  auto entries = scan.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const BraessEntry& a, const BraessEntry& b) { return a.delta > b.delta; });
  const auto braess_count = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.is_braess; });
  switch (fmt) {
    case Format::text:
      print_header(out, "scan-braess", config);
      out << "n " << g.order() << " m " << g.size() << " kappa " << rational_text(kemeny_constant(g).exact) << '\n';
      if (scan.no_non_edges) {
        out << "no non-edges: graph is complete\n";
        break;
      }
      out << "u v delta approx braess\n";
      for (const auto& e : entries)
        out << e.edge.u << ' ' << e.edge.v << ' ' << to_string(e.delta) << ' ' << fixed6(e.delta.get_d()) << ' '
            << (e.is_braess ? "yes" : "no") << '\n';
      out << "paradoxical " << (scan.paradoxical ? "yes" : "no") << " (" << braess_count << " Braess edges of "
          << entries.size() << " non-edges)\n";
      break;
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("scan-braess", config);
      j["n"] = g.order();
      j["m"] = g.size();
      j["no_non_edges"] = scan.no_non_edges;
      j["paradoxical"] = scan.paradoxical;
      j["entries"] = ordered_json::array();
      for (const auto& e : entries)
        j["entries"].push_back({{"u", e.edge.u}, {"v", e.edge.v}, {"delta", rational_json(e.delta)}, {"braess", e.is_braess}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_header(out, "scan-braess", config);
      out << "u,v,delta_num,delta_den,delta_float,braess\n";
      for (const auto& e : entries)
        out << e.edge.u << ',' << e.edge.v << ',' << rational_csv(e.delta) << ',' << (e.is_braess ? 1 : 0) << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- check-paradox

std::string verdict_text(const PhiBreakdown& b) {
  if (b.verdict) return "paradoxical";
  if (b.boundary) return "not paradoxical (boundary: Phi = 0, kappa unchanged)";
  return "not paradoxical";
}

int cmd_check_paradox(const Options& o, Format fmt, std::ostream& out) {
  auto [g, config] = load_graph(o);
  if (o.vertex < 0) throw UsageError("--vertex is required");
  const auto pairs = pairs_from(o, {-1, -1});
  if (pairs.size() != 1) throw UsageError("check-paradox needs exactly one pair: --k1 and --k2");
  const KPair p = pairs.front();
  config.emplace_back("vertex", std::to_string(o.vertex));
  config.emplace_back("k1", std::to_string(p.k1));
  config.emplace_back("k2", std::to_string(p.k2));
  config.emplace_back("verify", o.verify ? "1" : "0");
  const auto ev = is_paradoxical_at(g, o.vertex, p.k1, p.k2, o.verify);
  const auto& b = ev.breakdown;
  switch (fmt) {
    case Format::text:
      print_header(out, "check-paradox", config);
      out << "k        " << b.k << "\nm        " << b.m << "\ntau      " << b.tau << "\nphi_v    " << b.phi_v
          << "\nphi1     " << to_string(b.polys.phi1) << "\nphi2     " << to_string(b.polys.phi2) << "\nphi3     "
          << to_string(b.polys.phi3) << "\nPhi      " << to_string(b.phi) << "\nverdict  " << verdict_text(b) << '\n';
      if (ev.verified) {
        out << "open     n=" << ev.open_graph.order() << " m=" << ev.open_graph.size() << " edges "
            << edges_text(ev.open_graph) << "\nclosed   n=" << ev.closed_graph.order() << " m=" << ev.closed_graph.size()
            << " edges " << edges_text(ev.closed_graph) << "\nkappa_open   " << rational_text(ev.kappa_open)
            << "\nkappa_closed " << rational_text(ev.kappa_closed) << "\ndelta        " << rational_text(ev.delta)
            << "\nsign check   agrees\n";
      }
      break;
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("check-paradox", config);
      j["k"] = b.k;
      j["m"] = b.m.get_str();
      j["tau"] = b.tau.get_str();
      j["phi_v"] = b.phi_v.get_str();
      j["phi1"] = rational_json(b.polys.phi1);
      j["phi2"] = rational_json(b.polys.phi2);
      j["phi3"] = rational_json(b.polys.phi3);
      j["Phi"] = rational_json(b.phi);
      j["paradoxical"] = b.verdict;
      j["boundary"] = b.boundary;
      if (ev.verified) {
        j["open_graph"] = {{"n", ev.open_graph.order()}, {"edges", edges_json(ev.open_graph)}};
        j["closed_graph"] = {{"n", ev.closed_graph.order()}, {"edges", edges_json(ev.closed_graph)}};
        j["kappa_open"] = rational_json(ev.kappa_open);
        j["kappa_closed"] = rational_json(ev.kappa_closed);
        j["delta"] = rational_json(ev.delta);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_header(out, "check-paradox", config);
      out << "vertex,k1,k2,k,m,tau,phi_v,Phi_num,Phi_den,Phi_float,paradoxical,boundary";
      if (ev.verified) out << ",delta_num,delta_den,delta_float";
      out << '\n'
          << b.v << ',' << b.k1 << ',' << b.k2 << ',' << b.k << ',' << b.m << ',' << b.tau << ',' << b.phi_v << ','
          << rational_csv(b.phi) << ',' << (b.verdict ? 1 : 0) << ',' << (b.boundary ? 1 : 0);
      if (ev.verified) out << ',' << rational_csv(ev.delta);
      out << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- family-table

std::string optional_text(const std::optional<int>& x) { return x ? std::to_string(*x) : "none"; }

ordered_json optional_json(const std::optional<int>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

int cmd_family_table(const Options& o, Format fmt, std::ostream& out) {
  Config config;
  const auto fam = family_from(o, config);
  const auto pairs = pairs_from(o, {1, 2});
  const int n_min = std::max(o.n_min, fam.min_order());
  config.emplace_back("n_min", std::to_string(n_min));
  config.emplace_back("n_max", std::to_string(o.n_max));
  std::string pair_list;
  for (const auto& p : pairs) pair_list += (pair_list.empty() ? "" : ";") + std::to_string(p.k1) + "," + std::to_string(p.k2);
  config.emplace_back("pairs", pair_list);

  std::vector<ThresholdReport> reports;
  for (const auto& p : pairs) reports.push_back(threshold_scan(fam, p.k1, p.k2, n_min, o.n_max, o.threads));

  auto agreement = [&](const ThresholdReport& r) -> std::string {
    const auto known = known_threshold(fam, r.pair);
    if (!known) return "no stated row";
    return r.first_n_true == known ? "agrees" : "DIFFERS";
  };

  switch (fmt) {
    case Format::text:
      print_header(out, "family-table", config);
      for (const auto& r : reports) {
        out << "pair " << pair_text(r.pair) << '\n' << "n Phi verdict ratio\n";
        for (const auto& row : r.rows)
          out << row.n << ' ' << to_string(row.phi) << ' '
              << (row.verdict ? "true" : (row.boundary ? "boundary" : "false")) << ' ' << fixed6(row.ratio.get_d())
              << '\n';
        out << "summary " << pair_text(r.pair) << " first_n_true=" << optional_text(r.first_n_true)
            << " first_positive=" << optional_text(r.first_positive) << " boundary=";
        if (r.boundary_ns.empty()) out << "none";
        for (std::size_t i = 0; i < r.boundary_ns.size(); ++i) out << (i ? "," : "") << r.boundary_ns[i];
        out << " certified=" << (r.certified ? "yes" : "no")
            << " stated=" << optional_text(known_threshold(fam, r.pair)) << ' ' << agreement(r) << '\n';
      }
      break;
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("family-table", config);
      j["reports"] = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json jr;
        jr["k1"] = r.pair.k1;
        jr["k2"] = r.pair.k2;
        jr["first_n_true"] = optional_json(r.first_n_true);
        jr["first_positive"] = optional_json(r.first_positive);
        jr["boundary"] = r.boundary_ns;
        jr["certified"] = r.certified;
        jr["stated_threshold"] = optional_json(known_threshold(fam, r.pair));
        jr["agreement"] = agreement(r);
        jr["rows"] = ordered_json::array();
        for (const auto& row : r.rows)
          jr["rows"].push_back({{"n", row.n},
                                {"Phi", rational_json(row.phi)},
                                {"verdict", row.verdict},
                                {"boundary", row.boundary},
                                {"ratio", rational_json(row.ratio)}});
        j["reports"].push_back(jr);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_header(out, "family-table", config);
      out << "k1,k2,n,Phi_num,Phi_den,Phi_float,verdict,boundary,ratio_num,ratio_den,ratio_float\n";
      for (const auto& r : reports)
        for (const auto& row : r.rows)
          out << r.pair.k1 << ',' << r.pair.k2 << ',' << row.n << ',' << rational_csv(row.phi) << ','
              << (row.verdict ? 1 : 0) << ',' << (row.boundary ? 1 : 0) << ',' << rational_csv(row.ratio) << '\n';
      for (const auto& r : reports)
        out << "# summary " << pair_text(r.pair) << " first_n_true=" << optional_text(r.first_n_true)
            << " certified=" << (r.certified ? "yes" : "no")
            << " stated=" << optional_text(known_threshold(fam, r.pair)) << ' ' << agreement(r) << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- sequence-ratio

int cmd_sequence_ratio(const Options& o, Format fmt, std::ostream& out) {
  Config config;
  const auto fam = family_from(o, config);
  const Rational cutoff = parse_rational(o.cutoff);
  const auto pairs = pairs_from(o, {-1, -1});
  const int n_min = std::max(o.n_min, fam.min_order());
  config.emplace_back("n_min", std::to_string(n_min));
  config.emplace_back("n_max", std::to_string(o.n_max));
  config.emplace_back("cutoff", to_string(cutoff));

  const auto series = ratio_series(fam, n_min, o.n_max, pairs, o.threads);
  const bool tree_family = fam.kind && *fam.kind != FamilyKind::complete && *fam.kind != FamilyKind::cycle;
  std::optional<SequenceDescriptor> profile;
  if (tree_family) profile = sequence_profile(fam, n_min, o.n_max, cutoff);

  auto trend_of_ratio = [&] {
    std::vector<int> steps;
    for (std::size_t i = 1; i < series.points.size(); ++i)
      steps.push_back(cmp(series.points[i].ratio, series.points[i - 1].ratio));
    const bool up = std::any_of(steps.begin(), steps.end(), [](int c) { return c > 0; });
    const bool down = std::any_of(steps.begin(), steps.end(), [](int c) { return c < 0; });
    return to_string(up && down ? Trend::mixed : up ? Trend::increasing : down ? Trend::decreasing : Trend::flat);
  };

  switch (fmt) {
    case Format::text:
    case Format::csv: {
      const bool csv = fmt == Format::csv;
      const char sep = csv ? ',' : ' ';
      print_header(out, "sequence-ratio", config);
      out << (csv ? "n,ratio_num,ratio_den,ratio_float" : "n ratio approx");
      if (profile) out << sep << "alpha" << sep << "ell" << sep << "beta";
      for (const auto& p : pairs) out << sep << "paradoxical_" << p.k1 << '_' << p.k2;
      out << '\n';
      for (std::size_t i = 0; i < series.points.size(); ++i) {
        const auto& pt = series.points[i];
        out << pt.n << sep;
        if (csv)
          out << rational_csv(pt.ratio);
        else
          out << to_string(pt.ratio) << ' ' << fixed6(pt.ratio.get_d());
        if (profile) {
          const auto& r = profile->rows[i];
          out << sep << r.alpha << sep << r.ell << sep << r.beta;
        }
        for (const auto& b : pt.phis) out << sep << (b.verdict ? 1 : 0);
        out << '\n';
      }
      const std::string prefix = csv ? "# " : "";
      out << prefix << "ratio trend (observed): " << trend_of_ratio() << '\n';
      if (profile) {
        out << prefix << "beta*alpha^3/n^2 trend (observed): " << to_string(profile->beta_alpha3_over_n2)
            << ", net " << profile->beta_alpha3_over_n2_net << '\n'
            << prefix << "alpha/n^(2/3) trend (observed): " << to_string(profile->alpha_over_n23) << ", net "
            << profile->alpha_over_n23_net << '\n';
      }
      break;
    }
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("sequence-ratio", config);
      j["points"] = ordered_json::array();
      for (std::size_t i = 0; i < series.points.size(); ++i) {
        const auto& pt = series.points[i];
        ordered_json jp{{"n", pt.n}, {"ratio", rational_json(pt.ratio)}};
        if (profile) {
          jp["alpha"] = profile->rows[i].alpha;
          jp["ell"] = profile->rows[i].ell;
          jp["beta"] = profile->rows[i].beta;
        }
        for (const auto& b : pt.phis) jp["paradoxical_" + std::to_string(b.k1) + "_" + std::to_string(b.k2)] = b.verdict;
        j["points"].push_back(jp);
      }
      j["ratio_trend"] = trend_of_ratio();
      if (profile) {
        j["beta_alpha3_over_n2_trend"] = to_string(profile->beta_alpha3_over_n2);
        j["alpha_over_n23_trend"] = to_string(profile->alpha_over_n23);
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- oracle-verify

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Check> oracle_checks(const Graph& g, int bound) {
  std::vector<Check> checks;
  const int n = g.order();

  const BigInt tau = tree_count(g);
  const BigInt tau_enum = oracle::enumerate_spanning_trees(g, bound);
  checks.push_back({"tree_count", tau == tau_enum, "determinant " + tau.get_str() + ", enumeration " + tau_enum.get_str()});

  const auto fm = forest_matrix(g);
  const auto f_enum = oracle::forest_matrix_bruteforce(g, bound);
  bool f_ok = fm->tau == tau && fm->f == f_enum;
  for (Vertex i = 0; i < n && f_ok; ++i)
    for (Vertex j = i + 1; j < n && f_ok; ++j) f_ok = forest_count(g, i, j) == f_enum(i, j);
  checks.push_back({"forest_matrix", f_ok, std::to_string(n * (n - 1) / 2) + " pairs"});

  bool q_ok = true;
  std::string q_detail = "all anchors";
  for (Vertex v = 0; v < n && q_ok; ++v) {
    const auto q_enum = oracle::q_matrix_bruteforce(g, v, bound);
    q_ok = q_matrix(g, v).q == q_enum && grounded_q_matrix(g, v).q == q_enum;
    if (!q_ok) q_detail = "mismatch at anchor " + std::to_string(v);
  }
  checks.push_back({"q_matrix", q_ok, q_detail});

  if (n >= 2) {
    const Rational kappa = kemeny_constant(g).exact;
    const Rational mfpt = kemeny_mfpt(g);
    bool brute_ok = true;
    std::string identity_detail;
    Rational brute;
    try {
      const auto bf = oracle::kemeny_bruteforce(g, bound);
      brute = bf.kappa;
      identity_detail = "sum with return times " + to_string(bf.weighted_sum_return_time) + " = kappa + 1";
    } catch (const InternalConsistency& e) {
      brute_ok = false;
      identity_detail = e.what();
    }
    checks.push_back({"kemeny", brute_ok && kappa == mfpt && kappa == brute,
                      "formula " + to_string(kappa) + ", passage times " + to_string(mfpt) + ", fundamental matrix " +
                          to_string(brute)});
    checks.push_back({"weighted_passage_identity", brute_ok, identity_detail});
  }
  return checks;
}

int cmd_oracle_verify(const Options& o, Format fmt, std::ostream& out) {
  auto [g, config] = load_graph(o);
  config.emplace_back("max_n", std::to_string(o.max_n));
  if (g.order() > o.max_n)
    throw OracleBoundExceeded("oracle-verify: order " + std::to_string(g.order()) + " exceeds --max-n " +
                              std::to_string(o.max_n));
  require_connected(g, "oracle-verify");
  const auto checks = oracle_checks(g, o.max_n);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  switch (fmt) {
    case Format::text:
      print_header(out, "oracle-verify", config);
      for (const auto& c : checks) out << (c.pass ? "pass " : "FAIL ") << c.name << ": " << c.detail << '\n';
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      break;
    case Format::json: {
      ordered_json j;
      j["config"] = config_json("oracle-verify", config);
      j["checks"] = ordered_json::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["all_passed"] = all;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_header(out, "oracle-verify", config);
      out << "check,pass\n";
      for (const auto& c : checks) out << c.name << ',' << (c.pass ? 1 : 0) << '\n';
      break;
  }
  return all ? kSuccess : kInternalError;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("BRAESSLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kemeny's constant, Braess edges and twin pendent path analysis", "braesslab"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", o.threads, "Worker threads (default: $BRAESSLAB_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Edge-list file");
    sub->add_option("--family", o.family, "Generate the graph instead: complete, cycle, path, star or broom");
    sub->add_option("--n", o.n, "Order of the generated graph");
    sub->add_option("--alpha", o.alpha, "Broom handle length");
  };
  auto family_options = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "complete, cycle, path, star or broom")->required();
    sub->add_option("--alpha", o.alpha, "Broom handle length");
    sub->add_option("--alpha-rule", o.alpha_rule, "Broom handle rule: fixed or sqrt");
    sub->add_option("--vertex-policy", o.policy, "fixed, pendent or centre");
    sub->add_option("--vertex", o.vertex, "Vertex id for the fixed policy");
    sub->add_option("--n-min", o.n_min, "Smallest order");
    sub->add_option("--n-max", o.n_max, "Largest order");
  };

  auto* kemeny = app.add_subcommand("kemeny", "Kemeny's constant of a graph");
  common(kemeny);
  graph_input(kemeny);
  kemeny->add_flag("--verify", o.verify, "Cross-check against passage times and the spectrum");

  auto* scan = app.add_subcommand("scan-braess", "Change in Kemeny's constant for every non-edge");
  common(scan);
  graph_input(scan);

  auto* check = app.add_subcommand("check-paradox", "Twin pendent path criterion at one vertex");
  common(check);
  graph_input(check);
  check->add_option("--vertex", o.vertex, "Attachment vertex")->required();
  check->add_option("--k1", o.k1, "First path length")->required();
  check->add_option("--k2", o.k2, "Second path length")->required();
  check->add_flag("--verify", o.verify, "Build both graphs and compare the exact change in kappa");

  auto* table = app.add_subcommand("family-table", "Per-order verdicts and thresholds for a graph family");
  common(table);
  family_options(table);
  table->add_option("--k1", o.k1, "First path length");
  table->add_option("--k2", o.k2, "Second path length");
  table->add_option("--pair", o.pairs, "Extra pair as k1,k2 (repeatable)");

  auto* seq = app.add_subcommand("sequence-ratio", "phi / (4 m^2 tau) along a graph family");
  common(seq);
  family_options(seq);
  seq->add_option("--cutoff", o.cutoff, "Eccentricity fraction counted in beta (default 1/2)");
  seq->add_option("--pair", o.pairs, "Add a verdict column for k1,k2 (repeatable)");

  auto* verify = app.add_subcommand("oracle-verify", "Compare every exact route with brute-force enumeration");
  common(verify);
  graph_input(verify);
  verify->add_option("--max-n", o.max_n, "Largest order the oracle accepts")->check(CLI::Range(1, 31));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const Format fmt = parse_format(o.format);
    if (*kemeny) return cmd_kemeny(o, fmt, out);
    if (*scan) return cmd_scan_braess(o, fmt, out);
    if (*check) return cmd_check_paradox(o, fmt, out);
    if (*table) return cmd_family_table(o, fmt, out);
    if (*seq) return cmd_sequence_ratio(o, fmt, out);
    if (*verify) return cmd_oracle_verify(o, fmt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalConsistency& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kInternalError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OracleBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace braesslab::cli
