#include "graph.h"

#include <algorithm>

namespace d4c {

std::string Label::to_string() const {
  switch (kind) {
    case Kind::LatticeX: return "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::LatticeY: return "y(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::GadgetInternal: return name + "#" + std::to_string(local);
    case Kind::Boundary: return name;
    default: return "";
  }
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  g.labels_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& l : g.adj_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return g;
}

Graph Graph::without_edge(const Edge& e) const {
  if (!has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  Graph g = *this;
  auto drop = [&](int a, int b) {
    auto& l = g.adj_[a];
    l.erase(std::lower_bound(l.begin(), l.end(), b));
  };
  drop(e.u, e.v);
  drop(e.v, e.u);
  return g;
}

long Graph::edge_count() const {
  long s = 0;
  for (const auto& l : adj_) s += static_cast<long>(l.size());
  return s / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
  const auto& l = adj_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_label(int v, Label l) { labels_.at(v) = std::move(l); }
const Label& Graph::label(int v) const { return labels_.at(v); }

void Graph::check_consistent() const {
  for (int u = 0; u < vertex_count(); ++u) {
    const auto& l = adj_[u];
    if (!std::is_sorted(l.begin(), l.end())) throw std::runtime_error("unsorted adjacency");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw std::runtime_error("parallel edge");
    for (int v : l) {
      if (v == u) throw std::runtime_error("self-loop");
      if (v < 0 || v >= vertex_count()) throw std::runtime_error("bad neighbor id");
      if (!has_edge(v, u)) throw std::runtime_error("asymmetric adjacency");
    }
  }
}

}  // namespace d4c
