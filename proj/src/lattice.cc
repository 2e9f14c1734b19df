#include "lattice.h"

#include <stdexcept>

namespace d4c {

int LatticeHandle::x(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("x(i,j) out of range");
  return (i - 1) * n + (j - 1);
}

int LatticeHandle::y(int i, int j) const {
  if (i < 1 || i > n - 1 || j < 1 || j > n + 1) throw std::out_of_range("y(i,j) out of range");
  return n * n + (i - 1) * (n + 1) + (j - 1);
}

LatticeHandle build_lattice(int n) {
  if (n < 2) throw std::invalid_argument("lattice needs n >= 2");
  LatticeHandle lat;
  lat.n = n;
  std::vector<Edge> edges;
  auto X = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  auto Y = [&](int i, int j) { return n * n + (i - 1) * (n + 1) + (j - 1); };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      edges.emplace_back(X(i, j), X(i + 1, j));
      edges.emplace_back(X(i, j), Y(i, j));
      edges.emplace_back(X(i, j), Y(i, j + 1));
      edges.emplace_back(X(i + 1, j), Y(i, j));
      edges.emplace_back(X(i + 1, j), Y(i, j + 1));
    }
  lat.graph = Graph::build(2 * n * n - 1, edges);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) lat.graph.set_label(X(i, j), Label::lattice_x(i, j));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n + 1; ++j) lat.graph.set_label(Y(i, j), Label::lattice_y(i, j));
  return lat;
}

PartialColoring row_coloring(const LatticeHandle& lat, RowKind kind, int t,
                             int a, int s, int b) {
  int n = lat.n;
  if (t < 1 || t > n) throw std::invalid_argument("row out of range");
  if (a < 1 || a > 3) throw std::invalid_argument("bad color");
  PartialColoring pc(lat.vertex_count());
  switch (kind) {
    case RowKind::Smear:
      for (int j = 1; j <= n; ++j) pc.color[lat.x(t, j)] = static_cast<uint8_t>(a);
      break;
    case RowKind::Motif:
      if (s < 1 || s > n || b < 1 || b > 3 || a == b)
        throw std::invalid_argument("bad motif parameters");
      for (int j = 1; j <= n; ++j)
        pc.color[lat.x(t, j)] = static_cast<uint8_t>(j == s ? b : a);
      break;
    case RowKind::Pattern:
      if (s < 1 || s > n || b < 1 || b > 3 || a == b)
        throw std::invalid_argument("bad pattern parameters");
      for (int j = 1; j <= n; ++j)
        pc.color[lat.x(t, j)] = static_cast<uint8_t>(j <= s ? a : b);
      break;
  }
  return pc;
}

bool verify_endrow_transfer(const LatticeHandle& lat, const Graph& g) {
  int n = lat.n;
  bool ok = true;
  for_each_coloring(g, 3, PartialColoring(), [&](const PartialColoring& pc) {
    for (int i = 1; i < n && ok; ++i) {
      uint8_t c = pc.color[lat.y(i, 1)];
      for (int j = 2; j <= n + 1; ++j)
        if (pc.color[lat.y(i, j)] != c) {
          ok = false;
          break;
        }
    }
    for (int j1 = 1; j1 <= n && ok; ++j1)
      for (int j2 = j1 + 1; j2 <= n; ++j2) {
        bool top = pc.color[lat.x(1, j1)] == pc.color[lat.x(1, j2)];
        bool bot = pc.color[lat.x(n, j1)] == pc.color[lat.x(n, j2)];
        if (top != bot) {
          ok = false;
          break;
        }
      }
    return ok;
  });
  return ok;
}

bool verify_endrow_transfer(const LatticeHandle& lat) {
  return verify_endrow_transfer(lat, lat.graph);
}

}  // namespace d4c
