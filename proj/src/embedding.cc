#include "embedding.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "assembly.h"
#include "json.hpp"

namespace d4c {

void check_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.size()) != g.vertex_count())
    throw std::invalid_argument("rotation size mismatch");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> a = rot[v];
    std::sort(a.begin(), a.end());
    if (a != g.neighbors(v))
      throw std::invalid_argument("rotation of vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
  }
}

namespace {

// Dart machinery: dart id = offset[v] + p represents the directed edge
// (v, rot[v][p]). alpha reverses a dart; phi is the face-walk successor
// (after (u,v) comes (v, successor of u around v)).
struct Darts {
  const RotationSystem* rot;
  std::vector<int> offset;
  std::vector<std::map<int, int>> pos;  // pos[v][u] = index of u in rot[v]
  int count = 0;

  explicit Darts(const RotationSystem& r) : rot(&r) {
    int n = static_cast<int>(r.size());
    offset.resize(n);
    pos.resize(n);
    for (int v = 0; v < n; ++v) {
      offset[v] = count;
      count += static_cast<int>(r[v].size());
      for (size_t p = 0; p < r[v].size(); ++p) pos[v][r[v][p]] = static_cast<int>(p);
    }
  }
  int id(int u, int v) const { return offset[u] + pos[u].at(v); }
  std::pair<int, int> ends(int d) const {
    int u = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), d) -
                             offset.begin()) - 1;
    return {u, (*rot)[u][d - offset[u]]};
  }
  int alpha(int d) const {
    auto [u, v] = ends(d);
    return id(v, u);
  }
  int phi(int d) const {
    auto [u, v] = ends(d);
    int p = pos[v].at(u);
    int deg = static_cast<int>((*rot)[v].size());
    return offset[v] + (p + 1) % deg;
  }
};

// Cycle labels of a permutation given as a function.
template <typename F>
std::pair<std::vector<int>, int> cycles(int n, F next) {
  std::vector<int> label(n, -1);
  int k = 0;
  for (int d = 0; d < n; ++d) {
    if (label[d] >= 0) continue;
    for (int e = d; label[e] < 0; e = next(e)) label[e] = k;
    ++k;
  }
  return {label, k};
}

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int c = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++c;
        st.push_back(u);
      }
  }
  return c == g.vertex_count();
}

}  // namespace

std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& rot) {
  check_rotation(g, rot);
  Darts dt(rot);
  std::vector<char> used(dt.count, 0);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < dt.count; ++d0) {
    if (used[d0]) continue;
    std::vector<int> walk;
    for (int d = d0; !used[d]; d = dt.phi(d)) {
      used[d] = 1;
      walk.push_back(dt.ends(d).second);
    }
    faces.push_back(std::move(walk));
  }
  return faces;
}

bool verify_genus_zero(const Graph& g, const RotationSystem& rot) {
  if (!connected(g)) return false;
  long V = g.vertex_count();
  long E = g.edge_count();
  long F = static_cast<long>(trace_faces(g, rot).size());
  return V - E + F == 2;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  int idx = 0;
  for (const Edge& e : g.edges())
    boost::put(boost::edge_index, bg, boost::add_edge(e.u, e.v, bg).first, idx++);
  return bg;
}

}  // namespace

bool planarity_test(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

RotationSystem embedding_from_boost(const Graph& g) {
  BoostGraph bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(boost::num_vertices(bg));
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = emb.data());
  if (!ok) throw std::invalid_argument("graph is not planar");
  RotationSystem rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const EdgeDesc& e : emb[v]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  check_rotation(g, rot);
  return rot;
}

DualHandle dual_graph(const Graph& g, const RotationSystem& rot) {
  if (!verify_genus_zero(g, rot)) throw std::invalid_argument("rotation is not genus 0");
  Darts dt(rot);
  auto [face_of, nfaces] = cycles(dt.count, [&](int d) { return dt.phi(d); });
  DualHandle dh;
  dh.primal = g;
  dh.rotation = rot;
  dh.face_count = nfaces;
  for (const Edge& e : g.edges())
    dh.dual_edges.emplace_back(face_of[dt.id(e.u, e.v)], face_of[dt.id(e.v, e.u)]);
  return dh;
}

Graph DualHandle::dual_simple() const {
  std::vector<Edge> es;
  for (auto [a, b] : dual_edges)
    if (a != b) es.emplace_back(a, b);
  return Graph::build(face_count, es);
}

bool double_dual_check(const DualHandle& d) {
  Darts dt(d.rotation);
  // The dual's face-walk successor is phi∘alpha; its cycle count must
  // equal |V(primal)|.
  auto [lbl, k] = cycles(dt.count, [&](int x) { return dt.phi(dt.alpha(x)); });
  (void)lbl;
  return k == d.primal.vertex_count();
}

namespace {

// Straight-line drawing of the lattice: x(i,j) at (2j, -2i), y(i,j) at
// (2j-1, -2i-1). Each fan is sorted counterclockwise starting just past
// the outward direction (from the lattice center through the vertex), so
// boundary vertices keep their wrap gap on the outer face.
RotationSystem lattice_fans(const LatticeHandle& lat) {
  int n = lat.n;
  int nv = lat.vertex_count();
  std::vector<std::pair<double, double>> pt(nv);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) pt[lat.x(i, j)] = {2.0 * j, -2.0 * i};
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n + 1; ++j) pt[lat.y(i, j)] = {2.0 * j - 1, -2.0 * i - 1};
  double cx = n + 1.0, cy = -(n + 1.0);
  const double tau = 2.0 * std::acos(-1.0);
  RotationSystem rot(nv);
  for (int v = 0; v < nv; ++v) {
    auto [x0, y0] = pt[v];
    double ref = (x0 == cx && y0 == cy) ? tau / 4.0 : std::atan2(y0 - cy, x0 - cx);
    std::vector<std::pair<double, int>> keyed;
    for (int u : lat.graph.neighbors(v)) {
      double a = std::atan2(pt[u].second - y0, pt[u].first - x0);
      double k = std::fmod(a - ref, tau);
      if (k < 0) k += tau;
      keyed.emplace_back(k, u);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [k, u] : keyed) rot[v].push_back(u);
  }
  return rot;
}

}  // namespace

RotationSystem build_embedding(const GnHandle& h) {
  RotationSystem host = lattice_fans(h.lattice);
  int nv = h.graph.vertex_count();
  std::vector<std::vector<int>> frag(nv);
  for (int v = 0; v < h.lattice.vertex_count(); ++v) frag[v] = host[v];
  for (const CopyInfo& ci : h.copies) {
    GadgetBlueprint bp = build_gadget(ci.kind);
    bool flip = ci.name[0] == 'F';  // the top chain is mirrored across row 1
    for (int lv = 0; lv < bp.graph.vertex_count(); ++lv) {
      std::vector<int> lst;
      for (int lu : bp.rotation[lv]) lst.push_back(ci.local_to_global[lu]);
      if (flip) std::reverse(lst.begin(), lst.end());
      int gv = ci.local_to_global[lv];
      frag[gv].insert(frag[gv].end(), lst.begin(), lst.end());
    }
  }
  check_rotation(h.graph, frag);
  return frag;
}

std::string rotation_to_json(const Graph& g, const RotationSystem& rot) {
  nlohmann::json j = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string key = g.label(v).to_string();
    if (key.empty()) key = "v" + std::to_string(v);
    nlohmann::json lst = nlohmann::json::array();
    for (int u : rot[v]) {
      std::string nm = g.label(u).to_string();
      lst.push_back(nm.empty() ? "v" + std::to_string(u) : nm);
    }
    j[key] = lst;
  }
  return j.dump(2);
}

}  // namespace d4c
