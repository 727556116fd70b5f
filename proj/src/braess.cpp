#include "braesslab/braess.hpp"

#include "braesslab/errors.hpp"
#include "braesslab/forest.hpp"
#include "braesslab/kemeny.hpp"
#include "braesslab/parallel.hpp"

namespace braesslab {

namespace {

void require_nontrivial(const Graph& g, const char* context) {
  if (g.order() < 2) throw InvalidParameter(std::string(context) + ": graph needs at least 2 vertices");
  require_connected(g, context);
}

BigInt divide_by_3(BigInt value) {
  mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), 3);
  return value;
}

}  // namespace

BigInt phi_v(const Graph& g, Vertex v) {
  require_nontrivial(g, "phi_v");
  if (!g.has_vertex(v)) throw InvalidParameter("phi_v: invalid vertex " + std::to_string(v));
  return 2 * anchored_moment(g, v).dqd;
}

PhiPolys phi_polys(int k1, int k2) {
  validate(TwinPathSpec{0, k1, k2});
  const Rational s = k1 + k2;
  const Rational p = Rational(k1) * k2;
  PhiPolys out;
  out.phi1 = Rational(-2, 3) * s * (s - 1) + 2 * p;
  out.phi2 = -s * (5 * s * s - s - 1) + 12 * p * (s + 1);
  out.phi3 = -(s + 1) * s * (s - 1) * (s - 1);
  return out;
}

PhiBreakdown assemble_phi(Vertex v, int k1, int k2, const BigInt& phi_v, const BigInt& m, const BigInt& tau) {
  PhiBreakdown out;
  out.polys = phi_polys(k1, k2);
  out.v = v;
  out.k1 = k1;
  out.k2 = k2;
  out.k = k1 + k2 + 1;
  out.phi_v = phi_v;
  out.m = m;
  out.tau = tau;
  const Rational k = out.k;
  const Rational mq = m;
  const Rational tq = tau;
  out.phi = k * Rational(phi_v) + 4 * mq * mq * tq * k * out.polys.phi1 + 2 * mq * tq * k / 3 * out.polys.phi2 +
            2 * tq * k / 3 * out.polys.phi3;
  out.verdict = sgn(out.phi) > 0;
  out.boundary = sgn(out.phi) == 0;
  return out;
}

PhiBreakdown big_phi(const Graph& g, Vertex v, int k1, int k2) {
  validate(TwinPathSpec{v, k1, k2});
  require_nontrivial(g, "big_phi");
  if (!g.has_vertex(v)) throw InvalidParameter("big_phi: invalid vertex " + std::to_string(v));
  const auto moment = anchored_moment(g, v);
  return assemble_phi(v, k1, k2, 2 * moment.dqd, g.size(), moment.tau);
}

ParadoxEvidence is_paradoxical_at(const Graph& g, Vertex v, int k1, int k2, bool verify) {
  ParadoxEvidence out;
  out.breakdown = big_phi(g, v, k1, k2);
  if (!verify) return out;
  const auto open = attach_twin_paths(g, TwinPathSpec{v, k1, k2});
  out.open_graph = open.graph;
  out.closed_graph = close_twin_paths(open.graph, {open.tip1, open.tip2});
  out.kappa_open = kemeny_constant(out.open_graph).exact;
  out.kappa_closed = kemeny_constant(out.closed_graph).exact;
  out.delta = out.kappa_closed - out.kappa_open;
  out.verified = true;

  const auto& b = out.breakdown;
  const Rational denom = 4 * Rational(b.k) * (Rational(b.m) + b.k) * (Rational(b.m) + b.k - 1) * Rational(b.tau);
  const Rational expected = b.phi / denom;
  if (sgn(out.delta) != sgn(b.phi) || out.delta != expected)
    throw InternalConsistency("is_paradoxical_at: kappa change " + out.delta.get_str() + " but Phi gives " +
                              expected.get_str() + " (v=" + std::to_string(v) + ", k1=" + std::to_string(k1) +
                              ", k2=" + std::to_string(k2) + ")");
  return out;
}

BraessScanResult braess_scan(const Graph& g, unsigned threads) {
  require_nontrivial(g, "braess_scan");
  BraessScanResult out;
  const auto candidates = g.non_edges();
  if (candidates.empty()) {
    out.no_non_edges = true;
    return out;
  }
  const Rational base = kemeny_constant(g).exact;
  out.entries.resize(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    const Edge e = candidates[i];
    BraessEntry entry;
    entry.edge = e;
    entry.delta = kemeny_constant(g.with_edge(e.u, e.v)).exact - base;
    entry.is_braess = sgn(entry.delta) > 0;
    out.entries[i] = std::move(entry);
  });
  for (const auto& entry : out.entries) out.paradoxical = out.paradoxical || entry.is_braess;
  return out;
}

BigInt dfd_with_path(const Graph& h, Vertex v, int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw InvalidParameter("dfd_with_path: need k1, k2 >= 0 and k1 + k2 >= 1");
  if (!h.has_vertex(v)) throw InvalidParameter("dfd_with_path: invalid vertex");
  const auto fm = forest_matrix(h);
  const BigInt s = k1 + k2;  // k - 1
  const BigInt m = h.size();
  const BigInt path_term = divide_by_3(2 * s * (2 * s * s + 1));
  return fm->dfd + 4 * s * dvec_dot_fv(h, v) +
         fm->tau * (path_term + 4 * m * (BigInt(k1) * k1 + BigInt(k2) * k2));
}

BigInt dfd_with_cycle(const Graph& h, Vertex v, int k) {
  if (k < 3) throw InvalidParameter("dfd_with_cycle: cycle length must be at least 3");
  if (!h.has_vertex(v)) throw InvalidParameter("dfd_with_cycle: invalid vertex");
  const auto fm = forest_matrix(h);
  const BigInt kk = k;
  const BigInt m = h.size();
  return kk * fm->dfd + 4 * kk * kk * dvec_dot_fv(h, v) +
         divide_by_3(2 * fm->tau * (kk + 2 * m) * (kk - 1) * kk * (kk + 1));
}

}  // namespace braesslab
