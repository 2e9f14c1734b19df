#include "doctest.h"

#include <cstdint>

#include "coloring.h"
#include "gadgets.h"
#include "graph.h"

using namespace d4c;

namespace {

// Independent oracle: enumerate all k^V assignments.
long naive_count(const Graph& g, int k, const PartialColoring* pinned = nullptr) {
  int n = g.vertex_count();
  std::vector<uint8_t> c(n, 1);
  long count = 0;
  while (true) {
    bool ok = true;
    if (pinned)
      for (int v = 0; v < n && ok; ++v)
        if (pinned->color[v] && pinned->color[v] != c[v]) ok = false;
    for (int v = 0; v < n && ok; ++v)
      for (int u : g.neighbors(v))
        if (u > v && c[u] == c[v]) {
          ok = false;
          break;
        }
    if (ok) ++count;
    int i = 0;
    while (i < n && c[i] == k) c[i++] = 1;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

long solver_count(const Graph& g, int k) {
  SolveRequest r;
  r.graph = &g;
  r.k = k;
  r.mode = SolveMode::Count;
  return solve(r).count;
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::build(10, es);
}

}  // namespace

TEST_CASE("count mode agrees with brute force on small graphs") {
  Graph k3 = Graph::build(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  Graph k4 = Graph::build(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2),
                              Edge(1, 3), Edge(2, 3)});
  Graph c5 = Graph::build(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
  Graph path = Graph::build(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  for (const Graph* g : {&k3, &k4, &c5, &path})
    for (int k : {2, 3, 4}) CHECK(solver_count(*g, k) == naive_count(*g, k));
  CHECK(solver_count(k3, 3) == 6);
  CHECK(solver_count(k4, 3) == 0);
}

TEST_CASE("count mode agrees with brute force on a gadget graph") {
  Graph g = build_gadget(ContractId::F0).graph;  // 6 vertices
  CHECK(solver_count(g, 3) == naive_count(g, 3));
}

TEST_CASE("decision mode matches count mode and validates witnesses") {
  Graph pet = petersen();
  for (int k : {2, 3, 4}) {
    SolveRequest r;
    r.graph = &pet;
    r.k = k;
    SolveResult res = solve(r);
    CHECK(res.satisfiable == (naive_count(pet, k) > 0));
    if (res.satisfiable) CHECK(res.witness.complete_proper_on(pet));
  }
}

TEST_CASE("chromatic numbers of standard graphs") {
  CHECK(chromatic_number(Graph::build(0, {})) == 0);
  CHECK(chromatic_number(Graph::build(3, {})) == 1);
  CHECK(chromatic_number(Graph::build(2, {Edge(0, 1)})) == 2);
  Graph c5 = Graph::build(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)});
  CHECK(chromatic_number(c5) == 3);
  Graph k4 = Graph::build(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2),
                              Edge(1, 3), Edge(2, 3)});
  CHECK(chromatic_number(k4) == 4);
  CHECK(chromatic_number(k4.without_edge(Edge(2, 3))) == 3);
  std::vector<Edge> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  CHECK(chromatic_number(Graph::build(5, k5)) == 5);  // cap+1 marks "more than 4"
}

TEST_CASE("pinned colors are honored and validated") {
  Graph p3 = Graph::build(3, {Edge(0, 1), Edge(1, 2)});
  SolveRequest r;
  r.graph = &p3;
  r.k = 3;
  r.pinned = PartialColoring(3);
  r.pinned.color[0] = 2;
  SolveResult res = solve(r);
  REQUIRE(res.satisfiable);
  CHECK(res.witness.color[0] == 2);

  // conflicting pins on adjacent vertices are rejected up front
  r.pinned.color[1] = 2;
  CHECK_THROWS_AS(solve(r), std::invalid_argument);

  r.pinned.color[1] = 0;
  r.pinned.color[0] = 5;
  CHECK_THROWS_AS(solve(r), std::invalid_argument);
}

TEST_CASE("solver output is deterministic") {
  Graph pet = petersen();
  SolveRequest r;
  r.graph = &pet;
  r.k = 3;
  SolveResult a = solve(r), b = solve(r);
  REQUIRE(a.satisfiable);
  CHECK(a.witness.color == b.witness.color);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("branch priorities change the order, not the answer") {
  Graph pet = petersen();
  SolveRequest r;
  r.graph = &pet;
  r.k = 3;
  r.priority.assign(10, 0);
  for (int v = 0; v < 10; ++v) r.priority[v] = 10 - v;
  SolveResult res = solve(r);
  REQUIRE(res.satisfiable);
  CHECK(res.witness.complete_proper_on(pet));
  r.k = 2;
  CHECK(!solve(r).satisfiable);
}

TEST_CASE("for_each_coloring visits exactly the proper extensions") {
  Graph k3 = Graph::build(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  int seen = 0;
  PartialColoring pin(3);
  pin.color[0] = 1;
  for_each_coloring(k3, 3, pin, [&](const PartialColoring& pc) {
    CHECK(pc.complete_proper_on(k3));
    CHECK(pc.color[0] == 1);
    ++seen;
    return true;
  });
  CHECK(seen == 2);

  // early stop
  seen = 0;
  for_each_coloring(k3, 3, PartialColoring(3), [&](const PartialColoring&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("partial coloring predicates") {
  Graph p3 = Graph::build(3, {Edge(0, 1), Edge(1, 2)});
  PartialColoring pc(3);
  CHECK(pc.domain_size() == 0);
  pc.color[0] = 1;
  pc.color[1] = 1;
  CHECK(!pc.proper_on(p3));
  pc.color[1] = 2;
  CHECK(pc.proper_on(p3));
  CHECK(!pc.complete_proper_on(p3));
  pc.color[2] = 1;
  CHECK(pc.complete_proper_on(p3));
  CHECK(pc.domain_size() == 3);
}

TEST_CASE("cnf export uses the direct encoding") {
  Graph k3 = Graph::build(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  SolveRequest r;
  r.graph = &k3;
  r.k = 3;
  r.pinned = PartialColoring(3);
  r.pinned.color[0] = 1;
  std::string cnf = to_cnf(r);
  // 9 variables; 3 at-least-one + 9 at-most-one + 9 edge + 1 pin clauses
  CHECK(cnf.find("p cnf 9 22") == 0);
  CHECK(cnf.find("1 2 3 0") != std::string::npos);   // vertex 0 gets a color
  CHECK(cnf.find("\n1 0") != std::string::npos);     // the pin unit clause
  CHECK(cnf.find("-1 -4 0") != std::string::npos);   // edge (0,1) not both color 1
}
