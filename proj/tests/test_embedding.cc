#include "doctest.h"

#include <algorithm>

#include "assembly.h"
#include "embedding.h"
#include "lattice.h"

using namespace d4c;

namespace {

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::build(n, es);
}

Graph k33() {
  std::vector<Edge> es;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) es.emplace_back(i, j);
  return Graph::build(6, es);
}

Graph cube() {
  // vertices = 3-bit strings, edges between strings at Hamming distance 1
  std::vector<Edge> es;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) es.emplace_back(v, v ^ (1 << b));
  return Graph::build(8, es);
}

GadgetSet& shared_gadgets() {
  static GadgetSet gs = default_gadget_set();
  return gs;
}

}  // namespace

TEST_CASE("face tracing on a triangle gives two faces") {
  Graph k3 = complete(3);
  RotationSystem rot{{1, 2}, {0, 2}, {0, 1}};
  check_rotation(k3, rot);
  auto faces = trace_faces(k3, rot);
  CHECK(faces.size() == 2);
  for (const auto& w : faces) CHECK(w.size() == 3);
  CHECK(verify_genus_zero(k3, rot));
}

TEST_CASE("a tetrahedron embeds with four triangular faces") {
  Graph k4 = complete(4);
  RotationSystem rot{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  check_rotation(k4, rot);
  auto faces = trace_faces(k4, rot);
  CHECK(faces.size() == 4);
  CHECK(verify_genus_zero(k4, rot));
}

TEST_CASE("bad rotations are rejected, bad genus detected") {
  Graph k4 = complete(4);
  RotationSystem missing{{1, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  CHECK_THROWS(check_rotation(k4, missing));
  // a valid rotation that yields a toroidal-style embedding of K4
  RotationSystem twisted{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  check_rotation(k4, twisted);
  CHECK(!verify_genus_zero(k4, twisted));
}

TEST_CASE("independent planarity test knows the classics") {
  CHECK(planarity_test(complete(4)));
  CHECK(!planarity_test(complete(5)));
  CHECK(!planarity_test(k33()));
  CHECK(planarity_test(build_lattice(5).graph));
}

TEST_CASE("planar embeddings from the independent algorithm satisfy Euler") {
  for (int n : {3, 4, 5}) {
    Graph g = build_lattice(n).graph;
    RotationSystem rot = embedding_from_boost(g);
    CHECK(verify_genus_zero(g, rot));
    long f = static_cast<long>(trace_faces(g, rot).size());
    CHECK(f == g.edge_count() - g.vertex_count() + 2);
  }
  CHECK_THROWS(embedding_from_boost(complete(5)));
}

TEST_CASE("the cube dualizes to the octahedron") {
  Graph c = cube();
  RotationSystem rot = embedding_from_boost(c);
  REQUIRE(verify_genus_zero(c, rot));
  DualHandle d = dual_graph(c, rot);
  CHECK(d.face_count == 6);
  CHECK(d.dual_edge_count() == 12);
  Graph oct = d.dual_simple();
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK(double_dual_check(d));
}

TEST_CASE("a triangle dualizes to a doubled edge") {
  Graph k3 = complete(3);
  RotationSystem rot{{1, 2}, {0, 2}, {0, 1}};
  DualHandle d = dual_graph(k3, rot);
  CHECK(d.face_count == 2);
  CHECK(d.dual_edge_count() == 3);  // three parallel copies
  CHECK(d.dual_simple().edge_count() == 1);
  CHECK(double_dual_check(d));
}

TEST_CASE("assembled graphs carry genus-zero rotations at every size") {
  for (int n = 4; n <= 8; ++n) {
    GnHandle h = build_gn(n, shared_gadgets());
    RotationSystem rot = build_embedding(h);
    CHECK(verify_genus_zero(h.graph, rot));
    CHECK(planarity_test(h.graph));
    DualHandle d = dual_graph(h.graph, rot);
    CHECK(d.dual_edge_count() == h.graph.edge_count());  // conservation
    CHECK(double_dual_check(d));
    long f = static_cast<long>(d.face_count);
    CHECK(f == h.graph.edge_count() - h.graph.vertex_count() + 2);
  }
}

TEST_CASE("rotation json lists every vertex") {
  Graph k3 = complete(3);
  RotationSystem rot{{1, 2}, {0, 2}, {0, 1}};
  std::string j = rotation_to_json(k3, rot);
  // unlabeled vertices fall back to positional names
  for (const char* key : {"\"v0\"", "\"v1\"", "\"v2\""})
    CHECK(j.find(key) != std::string::npos);
}
