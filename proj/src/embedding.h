#pragma once
// Combinatorial embeddings: rotation systems, face tracing, genus
// certification, an independent planarity test, and planar duals.

#include <string>
#include <vector>

#include "graph.h"

namespace d4c {

struct GnHandle;  // assembly.h

// rot[v] = neighbors of v in counterclockwise order around v.
using RotationSystem = std::vector<std::vector<int>>;

// Throws unless rot lists every neighbor of every vertex exactly once.
void check_rotation(const Graph& g, const RotationSystem& rot);

// Face walks as vertex sequences. Tracing rule: the dart (u,v) is followed
// by (v,w) where w is the cyclic successor of u in rot[v]. Every dart is
// used exactly once across all walks.
std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& rot);

// Euler check V - E + F = 2 (connected g).
bool verify_genus_zero(const Graph& g, const RotationSystem& rot);

// Independent planarity decision (Boyer–Myrvold via Boost), used to
// cross-check the constructed rotations.
bool planarity_test(const Graph& g);

// A planar embedding computed by the independent algorithm (for graphs we
// did not construct a rotation for, e.g. extracted subgraphs). Requires
// planarity_test(g); throws otherwise.
RotationSystem embedding_from_boost(const Graph& g);

struct DualHandle {
  Graph primal;
  RotationSystem rotation;
  // Dual as an explicit multigraph: one vertex per face, one edge per
  // primal edge (kept as a list; loops and parallels allowed).
  int face_count = 0;
  std::vector<std::pair<int, int>> dual_edges;  // face id pairs, |E(primal)| entries
  Graph dual_simple() const;                    // parallels collapsed, loops dropped
  long dual_edge_count() const { return static_cast<long>(dual_edges.size()); }
};

DualHandle dual_graph(const Graph& g, const RotationSystem& rot);  // genus 0 required

// Face count of the dual under its induced rotation equals |V(primal)|.
bool double_dual_check(const DualHandle& d);

// Genus-0 rotation for G_n, composed from the lattice drawing and the
// gadget blueprints' frozen rotations.
RotationSystem build_embedding(const GnHandle& h);

std::string rotation_to_json(const Graph& g, const RotationSystem& rot);

}  // namespace d4c
