#include "doctest.h"

#include <map>

#include "criticality.h"

using namespace d4c;

namespace {

GadgetSet& shared_gadgets() {
  static GadgetSet gs = default_gadget_set();
  return gs;
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::build(n, es);
}

// w is proper everywhere except exactly on e (both ends share a color).
bool proper_except(const Graph& g, const PartialColoring& w, const Edge& e) {
  if (w.color[e.u] != w.color[e.v]) return false;
  return w.proper_on(g.without_edge(e));
}

}  // namespace

TEST_CASE("vertical witnesses clash only on their own edge") {
  GnHandle h = build_gn(4, shared_gadgets());
  const LatticeHandle& lat = h.lattice;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) {
      Edge e(lat.x(i, j), lat.x(i + 1, j));
      PartialColoring w = witness_vertical(h, i, j);
      CHECK(proper_except(lat.graph, w, e));
      // bottom row split, top row constant
      CHECK(w.color[lat.x(4, j)] != w.color[lat.x(4, j == 1 ? 2 : 1)]);
      CHECK(w.color[lat.x(1, 1)] == w.color[lat.x(1, 4)]);
      // and the full assembly accepts the witness once e is ignored
      CHECK(monochromatic_extension(h, w, {e}).has_value());
    }
  CHECK_THROWS(witness_vertical(h, 4, 1));
  CHECK_THROWS(witness_vertical(h, 1, 5));
}

TEST_CASE("diagonal witnesses cover every guaranteed diagonal") {
  GnHandle h = build_gn(4, shared_gadgets());
  const LatticeHandle& lat = h.lattice;
  int diagonals = 0;
  for (const Edge& e : guaranteed_critical_edges(h)) {
    const Label& lu = lat.graph.label(e.u);
    const Label& lv = lat.graph.label(e.v);
    if (lu.kind == Label::Kind::LatticeX && lv.kind == Label::Kind::LatticeX) continue;
    ++diagonals;
    auto w = witness_diagonal(h, e);
    REQUIRE(w.has_value());
    CHECK(proper_except(lat.graph, *w, e));
    CHECK(monochromatic_extension(h, *w, {e}).has_value());
  }
  CHECK(diagonals == 48 - 12);  // all guaranteed edges minus the verticals

  // stripe-end diagonals are out of scope for the constructed witnesses
  CHECK(!witness_diagonal(h, Edge(lat.x(1, 1), lat.y(1, 1))).has_value());
  CHECK_THROWS(witness_diagonal(h, Edge(lat.x(1, 1), lat.x(2, 1))));
}

TEST_CASE("is_critical uses witnesses on the lattice and the solver elsewhere") {
  GnHandle h = build_gn(4, shared_gadgets());
  Edge vertical(h.lattice.x(1, 1), h.lattice.x(2, 1));
  CriticalityReport rv = is_critical(h, vertical);
  CHECK(rv.critical);
  CHECK(rv.method == CriticalityReport::Method::ConstructedWitness);
  CHECK(rv.witness.complete_proper_on(h.graph.without_edge(vertical)));

  // a gadget-interior edge has no constructed witness
  Edge inner(-1, -2);
  bool found = false;
  for (const Edge& e : h.graph.edges())
    if (h.graph.label(e.u).kind == Label::Kind::GadgetInternal &&
        h.graph.label(e.v).kind == Label::Kind::GadgetInternal) {
      inner = e;
      found = true;
      break;
    }
  REQUIRE(found);
  CriticalityReport ri = is_critical(h, inner);
  CHECK(ri.method == CriticalityReport::Method::Solver);
  if (ri.critical) CHECK(ri.witness.complete_proper_on(h.graph.without_edge(inner)));

  CHECK_THROWS(is_critical(h, Edge(0, h.graph.vertex_count() - 1)));
}

TEST_CASE("extraction keeps an already-critical graph intact") {
  Graph k4 = complete(4);
  Graph q = extract_4_critical(k4);
  CHECK(q == k4);
}

TEST_CASE("extraction strips a pendant edge") {
  Graph k4 = complete(4);
  std::vector<Edge> es = k4.edges();
  es.emplace_back(0, 4);  // pendant vertex hanging off K4
  Graph g = Graph::build(5, es);
  Graph q = extract_4_critical(g);
  CHECK(q.vertex_count() == 4);
  CHECK(q == complete(4));
}

TEST_CASE("extraction rejects graphs with the wrong chromatic number") {
  Graph c5 = Graph::build(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
  CHECK_THROWS_AS(extract_4_critical(c5), std::invalid_argument);
  CHECK_THROWS_AS(extract_4_critical(complete(5)), std::invalid_argument);
}

TEST_CASE("the extracted core of the n=4 assembly is 4-critical") {
  GnHandle h = build_gn(4, shared_gadgets());
  Graph q = extract_4_critical(h);
  CHECK(q.vertex_count() == 130);
  CHECK(q.edge_count() == 266);
  CHECK(chromatic_number(q, 4, branch_priorities(q)) == 4);

  // every surviving edge is critical
  for (const Edge& e : q.edges()) {
    Graph r = q.without_edge(e);
    CHECK(chromatic_number(r, 4, branch_priorities(r)) == 3);
  }

  // the guaranteed edges all survive (matched through the labels)
  std::map<std::string, int> by_label;
  for (int v = 0; v < q.vertex_count(); ++v) by_label[q.label(v).to_string()] = v;
  for (const Edge& e : guaranteed_critical_edges(h)) {
    auto u = by_label.find(h.graph.label(e.u).to_string());
    auto v = by_label.find(h.graph.label(e.v).to_string());
    REQUIRE(u != by_label.end());
    REQUIRE(v != by_label.end());
    CHECK(q.has_edge(u->second, v->second));
  }
}

TEST_CASE("formula bound rises to 2.4 at the computed threshold") {
  int n0 = bound_threshold(27, 13, 2.4);
  CHECK(n0 == 620);
  CHECK(guaranteed_bound(n0, 27, 13) >= 2.4);
  CHECK(guaranteed_bound(n0 - 1, 27, 13) < 2.4);
  for (int n : {n0, 2 * n0, 10 * n0}) CHECK(guaranteed_bound(n, 27, 13) >= 2.4);
  CHECK(guaranteed_bound(100000000, 27, 13) == doctest::Approx(2.5).epsilon(1e-5));
}

TEST_CASE("density rows degrade to symbolic when the budget is gone") {
  auto rows = density_report(4, 6, shared_gadgets(), 0.0);
  REQUIRE(rows.size() == 3);
  for (const DensityRow& r : rows) {
    CHECK(r.symbolic);
    CHECK(r.qn_vertices == 0);
    CHECK(r.gn_vertices == 2L * r.n * r.n + 48 * r.n - 88);
    CHECK(r.guaranteed_bound > 0);
  }
  CHECK(rows[0].guaranteed_bound < rows[1].guaranteed_bound);
  CHECK(rows[1].guaranteed_bound < rows[2].guaranteed_bound);
}
