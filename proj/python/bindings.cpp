#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "braesslab/asymptotics.hpp"
#include "braesslab/braess.hpp"
#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/kemeny.hpp"
#include "braesslab/oracle.hpp"

namespace py = pybind11;
using namespace braesslab;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(x.get_num()), to_py(x.get_den()));
}

py::list to_py(const Matrix<BigInt>& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::dict to_py(const PhiBreakdown& b) {
  py::dict d;
  d["v"] = b.v;
  d["k1"] = b.k1;
  d["k2"] = b.k2;
  d["k"] = b.k;
  d["phi_v"] = to_py(b.phi_v);
  d["phi1"] = to_py(b.polys.phi1);
  d["phi2"] = to_py(b.polys.phi2);
  d["phi3"] = to_py(b.polys.phi3);
  d["m"] = to_py(b.m);
  d["tau"] = to_py(b.tau);
  d["Phi"] = to_py(b.phi);
  d["verdict"] = b.verdict;
  d["boundary"] = b.boundary;
  return d;
}

py::object optional_int(const std::optional<int>& x) { return x ? py::object(py::int_(*x)) : py::object(py::none()); }

FamilySpec family(const std::string& kind, const std::string& policy, Vertex vertex, int alpha, const std::string& alpha_rule) {
  const auto k = parse_family_kind(kind);
  FamilySpec fam = FamilySpec::with_default_policy(k);
  if (k == FamilyKind::broom)
    fam = FamilySpec::broom(alpha_rule == "sqrt" ? BroomAlphaRule::floor_sqrt : BroomAlphaRule::fixed, alpha, fam.policy);
  if (!policy.empty()) {
    fam.policy = parse_vertex_policy(policy);
    fam.fixed_vertex = vertex;
  }
  return fam;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Kemeny's constant, Braess edges and twin pendent paths";

  auto base = py::register_exception<DisconnectedGraph>(m, "DisconnectedGraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "EdgeListParseError", PyExc_ValueError);
  py::register_exception<InternalConsistency>(m, "InternalConsistencyError", PyExc_RuntimeError);
  py::register_exception<OracleBoundExceeded>(m, "OracleBoundError", PyExc_ValueError);
  (void)base;

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<Vertex, Vertex>>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> es;
                               for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
                               return es;
                             })
      .def("degree", &Graph::degree)
      .def("neighbours", &Graph::neighbours)
      .def("has_edge", &Graph::has_edge)
      .def("with_edge", &Graph::with_edge)
      .def("non_edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> es;
             for (const auto& e : g.non_edges()) es.emplace_back(e.u, e.v);
             return es;
           })
      .def("to_edge_list",
           [](const Graph& g) {
             std::ostringstream s;
             write_edge_list(s, g);
             return s.str();
           })
      .def_static("from_edge_list",
                  [](const std::string& text) {
                    std::istringstream s(text);
                    return read_edge_list(s);
                  })
      .def(py::self == py::self)
      .def("__hash__", &Graph::hash)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("make_family", [](const std::string& kind, int n, int alpha) { return make_family(parse_family_kind(kind), n, alpha); },
        py::arg("kind"), py::arg("n"), py::arg("alpha") = 0);
  m.def("triangle_with_pendent", &triangle_with_pendent);
  m.def("identify", [](const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    auto r = identify(g1, v1, g2, v2);
    return py::make_tuple(r.graph, r.second_map);
  });
  m.def("attach_twin_paths", [](const Graph& g, Vertex v, int k1, int k2) {
    auto r = attach_twin_paths(g, TwinPathSpec{v, k1, k2});
    return py::make_tuple(r.graph, r.tip1, r.tip2);
  });
  m.def("close_twin_paths", [](const Graph& g, Vertex a, Vertex b) { return close_twin_paths(g, {a, b}); });
  m.def("is_connected", &is_connected);
  m.def("is_tree", &is_tree);
  m.def("eccentricity", &eccentricity);
  m.def("diameter", &diameter);

  m.def("tree_count", [](const Graph& g) { return to_py(tree_count(g)); });
  m.def("forest_count", [](const Graph& g, Vertex i, Vertex j) { return to_py(forest_count(g, i, j)); });
  m.def("forest_matrix", [](const Graph& g) { return to_py(forest_matrix(g)->f); });
  m.def("q_matrix", [](const Graph& g, Vertex v) { return to_py(q_matrix(g, v).q); });
  m.def("resistance_distance", [](const Graph& g, Vertex i, Vertex j) { return to_py(resistance_distance(g, i, j)); });
  m.def("dvec_dot_fv", [](const Graph& g, Vertex v) { return to_py(dvec_dot_fv(g, v)); });
  m.def("dfd", [](const Graph& g) { return to_py(dfd(g)); });
  m.def("one_separation_dfd", [](const Graph& a, Vertex va, const Graph& b, Vertex vb) {
    return to_py(one_separation_dfd(a, va, b, vb));
  });

  m.def("kemeny_constant", [](const Graph& g) { return to_py(kemeny_constant(g).exact); });
  m.def("kemeny_spectral", &kemeny_spectral);
  m.def("kemeny_mfpt", [](const Graph& g) { return to_py(kemeny_mfpt(g)); });

  m.def("phi_v", [](const Graph& g, Vertex v) { return to_py(phi_v(g, v)); });
  m.def("phi_polys", [](int k1, int k2) {
    const auto p = phi_polys(k1, k2);
    return py::make_tuple(to_py(p.phi1), to_py(p.phi2), to_py(p.phi3));
  });
  m.def("big_phi", [](const Graph& g, Vertex v, int k1, int k2) { return to_py(big_phi(g, v, k1, k2)); });
  m.def(
      "is_paradoxical_at",
      [](const Graph& g, Vertex v, int k1, int k2, bool verify) {
        const auto ev = is_paradoxical_at(g, v, k1, k2, verify);
        py::dict d = to_py(ev.breakdown);
        if (ev.verified) {
          d["delta"] = to_py(ev.delta);
          d["kappa_open"] = to_py(ev.kappa_open);
          d["kappa_closed"] = to_py(ev.kappa_closed);
        }
        return d;
      },
      py::arg("g"), py::arg("v"), py::arg("k1"), py::arg("k2"), py::arg("verify") = false);
  m.def(
      "braess_scan",
      [](const Graph& g, unsigned threads) {
        const auto scan = braess_scan(g, threads);
        py::list entries;
        for (const auto& e : scan.entries) entries.append(py::make_tuple(e.edge.u, e.edge.v, to_py(e.delta), e.is_braess));
        return entries;
      },
      py::arg("g"), py::arg("threads") = 1);
  m.def("dfd_with_path", [](const Graph& h, Vertex v, int k1, int k2) { return to_py(dfd_with_path(h, v, k1, k2)); });
  m.def("dfd_with_cycle", [](const Graph& h, Vertex v, int k) { return to_py(dfd_with_cycle(h, v, k)); });

  m.def("ratio", [](const Graph& g, Vertex v) { return to_py(ratio(g, v)); });
  m.def(
      "threshold_scan",
      [](const std::string& kind, int k1, int k2, int n_min, int n_max, const std::string& policy, Vertex vertex,
         int alpha, const std::string& alpha_rule) {
        const auto fam = family(kind, policy, vertex, alpha, alpha_rule);
        const auto r = threshold_scan(fam, k1, k2, n_min, n_max);
        py::dict d;
        d["first_n_true"] = optional_int(r.first_n_true);
        d["first_positive"] = optional_int(r.first_positive);
        d["boundary"] = r.boundary_ns;
        d["certified"] = r.certified;
        d["stated_threshold"] = optional_int(known_threshold(fam, r.pair));
        return d;
      },
      py::arg("family"), py::arg("k1"), py::arg("k2"), py::arg("n_min") = 2, py::arg("n_max") = 20,
      py::arg("policy") = "", py::arg("vertex") = 0, py::arg("alpha") = 2, py::arg("alpha_rule") = "fixed");
  m.def("branch_min_dqd", [](const std::vector<std::pair<int, int>>& parts) { return to_py(branch_min_dqd(parts)); });
  m.def("broom_dqd", [](int n, int alpha) { return to_py(broom_dqd(n, alpha)); });
  m.def("pn_dqd", [](int n, Vertex v) { return to_py(pn_dqd(n, v)); });
  m.def("pendant_decomposition_dqd", [](const Graph& t, Vertex v) { return to_py(pendant_decomposition_dqd(t, v)); });
  m.def("augment_until_paradoxical", [](const Graph& h, Vertex w, const std::string& kind, int k1, int k2, int n_max,
                                        const std::string& policy) {
    const auto r = augment_until_paradoxical(h, w, family(kind, policy, 0, 2, "fixed"), k1, k2, n_max);
    return r.found ? py::object(py::make_tuple(r.n_attach, r.graph)) : py::object(py::none());
  }, py::arg("h"), py::arg("w"), py::arg("family"), py::arg("k1"), py::arg("k2"), py::arg("n_max"),
     py::arg("policy") = "");

  auto o = m.def_submodule("oracle", "Brute-force enumeration for small graphs");
  o.def("enumerate_spanning_trees", [](const Graph& g, int bound) { return to_py(oracle::enumerate_spanning_trees(g, bound)); },
        py::arg("g"), py::arg("bound") = oracle::kDefaultBound);
  o.def("census", [](const Graph& g, Vertex i, Vertex j, Vertex v) {
    const auto c = oracle::census(g, i, j, v);
    return py::make_tuple(to_py(c.i_j), to_py(c.ij_v), to_py(c.i_vj), to_py(c.iv_j));
  });
  o.def("kemeny_bruteforce", [](const Graph& g) { return to_py(oracle::kemeny_bruteforce(g).kappa); });
  o.def("connected_graph_catalogue", &oracle::connected_graph_catalogue);
  o.def("tree_catalogue", &oracle::tree_catalogue);
}
