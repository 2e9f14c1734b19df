#include "criticality.h"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace d4c {

PartialColoring witness_vertical(const GnHandle& h, int i, int j) {
  const LatticeHandle& lat = h.lattice;
  int n = lat.n;
  if (i < 1 || i > n - 1 || j < 1 || j > n) throw std::invalid_argument("bad vertical edge");
  PartialColoring w(lat.vertex_count());
  for (int s = 1; s < n; ++s)
    for (int l = 1; l <= n + 1; ++l) w.color[lat.y(s, l)] = 3;
  // Rows n..i+1: alternating near-constant rows broken at column j.
  for (int k = n; k >= i + 1; --k) {
    int a = ((n - k) % 2 == 0) ? 1 : 2;
    PartialColoring row = row_coloring(lat, RowKind::Motif, k, a, j, 3 - a);
    for (int l = 1; l <= n; ++l) w.color[lat.x(k, l)] = row.color[lat.x(k, l)];
  }
  // Rows i..1: constant rows alternating between the color of x(i+1,j)
  // and its partner — legal only with the edge x(i,j)x(i+1,j) gone.
  int a = w.color[lat.x(i + 1, j)];
  for (int k = i; k >= 1; --k) {
    int c = ((i - k) % 2 == 0) ? a : 3 - a;
    for (int l = 1; l <= n; ++l) w.color[lat.x(k, l)] = static_cast<uint8_t>(c);
  }
  return w;
}

namespace {

// Canonical diagonal witness for e = x(i,j)-y(i-1,j+1), i in [2,n], j in [n-1].
PartialColoring diagonal_canonical(const LatticeHandle& lat, int i, int j) {
  int n = lat.n;
  PartialColoring w(lat.vertex_count());
  // Rows n..i: alternating two-block rows split at column j.
  for (int k = n; k >= i; --k) {
    int a = ((n - k) % 2 == 0) ? 1 : 2;
    for (int l = 1; l <= n; ++l)
      w.color[lat.x(k, l)] = static_cast<uint8_t>(l <= j ? a : 3 - a);
  }
  int a = w.color[lat.x(i, j)];
  // Rows i-1..1: constant rows 3,2,3,2,...
  for (int k = i - 1; k >= 1; --k) {
    int c = ((i - 1 - k) % 2 == 0) ? 3 : 2;
    for (int l = 1; l <= n; ++l) w.color[lat.x(k, l)] = static_cast<uint8_t>(c);
  }
  for (int s = i; s <= n - 1; ++s)
    for (int l = 1; l <= n + 1; ++l) w.color[lat.y(s, l)] = 3;
  // The split stripe: legal only with x(i,j)y(i-1,j+1) gone.
  for (int l = 1; l <= n + 1; ++l)
    w.color[lat.y(i - 1, l)] = static_cast<uint8_t>(l <= j ? 3 - a : a);
  for (int s = 1; s <= i - 2; ++s)
    for (int l = 1; l <= n + 1; ++l) w.color[lat.y(s, l)] = 1;
  return w;
}

// The two lattice mirrors (left-right and top-bottom); both are
// automorphisms of L_n but not of G_n.
int mirror_vertex(const LatticeHandle& lat, int v, bool flip_i, bool flip_j) {
  int n = lat.n;
  const Label& l = lat.graph.label(v);
  if (l.kind == Label::Kind::LatticeX)
    return lat.x(flip_i ? n + 1 - l.i : l.i, flip_j ? n + 1 - l.j : l.j);
  if (l.kind == Label::Kind::LatticeY)
    return lat.y(flip_i ? n - l.i : l.i, flip_j ? n + 2 - l.j : l.j);
  throw std::logic_error("not a lattice vertex");
}

}  // namespace

std::optional<PartialColoring> witness_diagonal(const GnHandle& h, const Edge& e) {
  const LatticeHandle& lat = h.lattice;
  int n = lat.n;
  const Label& lu = lat.graph.label(e.u);
  const Label& lv = lat.graph.label(e.v);
  const Label* lx = &lu;
  const Label* ly = &lv;
  if (lx->kind != Label::Kind::LatticeX) std::swap(lx, ly);
  if (lx->kind != Label::Kind::LatticeX || ly->kind != Label::Kind::LatticeY)
    throw std::invalid_argument("not a diagonal lattice edge");
  if (ly->j == 1 || ly->j == n + 1) return std::nullopt;  // degree-2 endpoint
  // Orient onto the canonical shape x(i,j)-y(i-1,j+1) by mirroring.
  bool flip_i = ly->i == lx->i;      // the y endpoint sits below the x row
  bool flip_j = ly->j == lx->j;      // the y endpoint sits to the left
  int ci = flip_i ? n + 1 - lx->i : lx->i;
  int cj = flip_j ? n + 1 - lx->j : lx->j;
  PartialColoring canon = diagonal_canonical(lat, ci, cj);
  if (!flip_i && !flip_j) return canon;
  PartialColoring w(lat.vertex_count());
  for (int v = 0; v < lat.vertex_count(); ++v)
    w.color[v] = canon.color[mirror_vertex(lat, v, flip_i, flip_j)];
  return w;
}

CriticalityReport is_critical(const GnHandle& h, const Edge& e) {
  if (!h.graph.has_edge(e.u, e.v)) throw std::invalid_argument("edge not in G_n");
  CriticalityReport rep;
  rep.edge = e;
  int nlat = h.lattice.vertex_count();
  if (e.u < nlat && e.v < nlat) {
    const Label& lu = h.graph.label(e.u);
    const Label& lv = h.graph.label(e.v);
    std::optional<PartialColoring> w;
    if (lu.kind == Label::Kind::LatticeX && lv.kind == Label::Kind::LatticeX) {
      w = witness_vertical(h, std::min(lu.i, lv.i), lu.j);
    } else if (lu.kind == Label::Kind::LatticeX || lv.kind == Label::Kind::LatticeX) {
      w = witness_diagonal(h, e);
    }
    if (w) {
      // Mirrored witnesses are only guaranteed on the lattice; confirm the
      // extension on the full graph before trusting them.
      auto ext = monochromatic_extension(h, *w, {e});
      if (ext) {
        rep.critical = true;
        rep.witness = *ext;
        rep.method = CriticalityReport::Method::ConstructedWitness;
        return rep;
      }
    }
  }
  Graph g = h.graph.without_edge(e);
  SolveRequest req;
  req.graph = &g;
  req.k = 3;
  req.priority = branch_priorities(g);
  SolveResult res = solve(req);
  rep.critical = res.satisfiable;
  if (res.satisfiable) rep.witness = res.witness;
  rep.method = CriticalityReport::Method::Solver;
  return rep;
}

namespace {

Graph extract_impl(const Graph& g0, const std::vector<Edge>& known_critical) {
  {
    SolveRequest req;
    req.graph = &g0;
    req.k = 3;
    req.priority = branch_priorities(g0);
    if (solve(req).satisfiable) throw std::invalid_argument("graph is 3-colorable");
    req.k = 4;
    if (!solve(req).satisfiable) throw std::invalid_argument("graph is not 4-colorable");
  }
  Graph g = g0;
  for (const Edge& e : g0.edges()) {
    if (std::binary_search(known_critical.begin(), known_critical.end(), e)) continue;
    Graph reduced = g.without_edge(e);
    SolveRequest req;
    req.graph = &reduced;
    req.k = 3;
    req.priority = branch_priorities(reduced);
    if (!solve(req).satisfiable) g = reduced;  // e was not critical
  }
  // Compact away isolated vertices.
  std::vector<int> new_id(g.vertex_count(), -1);
  int nv = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) new_id[v] = nv++;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(new_id[e.u], new_id[e.v]);
  Graph q = Graph::build(nv, es);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (new_id[v] >= 0) q.set_label(new_id[v], g.label(v));
  return q;
}

}  // namespace

Graph extract_4_critical(const Graph& g0) { return extract_impl(g0, {}); }

Graph extract_4_critical(const GnHandle& h) {
  // Confirm each guaranteed edge is really critical before exempting it
  // from the solver sweep (the witness path makes this cheap).
  std::vector<Edge> gce = guaranteed_critical_edges(h);
  for (const Edge& e : gce)
    if (!is_critical(h, e).critical) throw std::logic_error("guaranteed edge not critical");
  return extract_impl(h.graph, gce);
}

double guaranteed_bound(int n, int k1, int k2) {
  double a = 2.0 * (k1 - 3), b = k2 - 4.0 * k1 + 7;
  return (5.0 * n * n - 9.0 * n + 4) / (2.0 * n * n + a * n + b);
}

int bound_threshold(int k1, int k2, double target) {
  double a = 2.0 * (k1 - 3), b = k2 - 4.0 * k1 + 7;
  // (5-2T) n^2 - (9+aT) n + (4-bT) >= 0 beyond the larger root.
  double A = 5.0 - 2.0 * target, B = -(9.0 + a * target), C = 4.0 - b * target;
  if (A <= 0) throw std::invalid_argument("target must be below 5/2");
  double vertex = -B / (2.0 * A);
  int n = std::max(4, static_cast<int>(std::ceil(vertex)));
  while (!(A * n * n + B * n + C >= 0 && 2.0 * n * n + a * n + b > 0)) ++n;
  return n;
}

std::vector<DensityRow> density_report(int n_from, int n_to, const GadgetSet& gs,
                                       double budget_secs) {
  std::vector<DensityRow> rows;
  using clock = std::chrono::steady_clock;
  double spent = 0.0;
  for (int n = n_from; n <= n_to; ++n) {
    GnHandle h = build_gn(n, gs);
    DensityRow row;
    row.n = n;
    row.gn_vertices = h.graph.vertex_count();
    row.gn_edges = h.graph.edge_count();
    row.guaranteed_bound = guaranteed_bound(n, h.k1, h.k2);
    if (spent < budget_secs) {
      auto t0 = clock::now();
      try {
        Graph q = extract_4_critical(h);
        row.qn_vertices = q.vertex_count();
        row.qn_edges = q.edge_count();
        row.qn_ratio = static_cast<double>(row.qn_edges) / row.qn_vertices;
      } catch (const std::exception&) {
        row.symbolic = true;
      }
      spent += std::chrono::duration<double>(clock::now() - t0).count();
    } else {
      row.symbolic = true;  // budget exhausted; carry the formula bound only
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace d4c
