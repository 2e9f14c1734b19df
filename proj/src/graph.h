#pragma once
// Simple undirected graphs with value semantics and semantic vertex labels.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace d4c {

struct Edge {
  int u, v;  // normalized: u < v
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop");
  }
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

struct Label {
  enum class Kind { None, LatticeX, LatticeY, GadgetInternal, Boundary };
  Kind kind = Kind::None;
  int i = 0, j = 0;      // lattice coordinates (1-based, as in the construction)
  std::string name;      // copy id for gadget internals, role name for boundary
  int local = 0;         // local vertex index within a gadget copy

  static Label lattice_x(int i, int j) { return {Kind::LatticeX, i, j, "", 0}; }
  static Label lattice_y(int i, int j) { return {Kind::LatticeY, i, j, "", 0}; }
  static Label internal(std::string copy, int local) {
    return {Kind::GadgetInternal, 0, 0, std::move(copy), local};
  }
  static Label boundary(std::string n) { return {Kind::Boundary, 0, 0, std::move(n), 0}; }
  std::string to_string() const;
};

class Graph {
 public:
  Graph() = default;

  // Canonical construction: validates endpoints, dedupes, sorts neighbor lists.
  static Graph build(int n, const std::vector<Edge>& edges);

  // Value semantics: returns a copy with e removed; *this is untouched.
  Graph without_edge(const Edge& e) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long edge_count() const;
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<Edge> edges() const;  // sorted

  void set_label(int v, Label l);
  const Label& label(int v) const;

  // Adjacency-only equality (canonical form makes this a simple compare).
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

  // Throws if symmetry/sortedness/simplicity is violated.
  void check_consistent() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Label> labels_;
};

}  // namespace d4c
