#pragma once
// G_n: the lattice, a chain of n-2 five-boundary gadget copies along each
// end row, and one four-boundary gadget closing the two chains.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadgets.h"
#include "lattice.h"

namespace d4c {

struct GadgetSet {
  GadgetBlueprint g1;  // used for every F_i and H_i copy
  GadgetBlueprint g2;  // the single closing copy H
  bool certified = false;
};

// Builds both blueprints; runs verify_contract unless verify=false.
// Throws if certification fails.
GadgetSet default_gadget_set(bool verify = true);

struct CopyInfo {
  std::string name;  // F1..F_{n-2}, H1..H_{n-2}, H
  ContractId kind;
  std::vector<int> local_to_global;             // blueprint id -> G_n id
  std::map<std::string, int> roles;             // v1..v5 / u1..u4 -> G_n id
};

struct GnHandle {
  int n = 0;
  Graph graph;
  LatticeHandle lattice;  // ids 0 .. 2n^2-2 coincide with graph ids
  std::vector<CopyInfo> copies;
  std::map<std::string, int> chain;  // s2..s_{n-1}, t.., p.., q.. -> id
  int k1 = 0, k2 = 0;
  bool has_closing_copy = true;
};

// n >= 4; gadget set must be certified. include_h=false omits the closing
// G2 copy (the resulting graph is 3-colorable — negative control).
GnHandle build_gn(int n, const GadgetSet& gs, bool include_h = true);

// Extends a proper 3-coloring of L_n - X to all of G_n - X, if possible.
// phi is indexed by lattice ids; X is a set of lattice edges to ignore.
// Returns the full coloring (indexed by G_n ids) or nothing.
std::optional<PartialColoring> monochromatic_extension(
    const GnHandle& h, const PartialColoring& phi, const std::vector<Edge>& X);

// All vertical lattice edges plus all diagonal edges not incident to a
// degree-2 lattice vertex; exactly 5n^2 - 9n + 4 edges, sorted.
std::vector<Edge> guaranteed_critical_edges(const GnHandle& h);

// Branch ranks for solving G_n (or any edge-deleted / label-preserving
// subgraph of it): lattice vertices first, then the chain pairs in order,
// gadget interiors last. With this ordering each copy's interior becomes a
// separate component of the unassigned residue as soon as its boundary is
// colored, so the solver settles it once per boundary tuple instead of
// re-enumerating it on every downstream dead end.
std::vector<int> branch_priorities(const Graph& g);

}  // namespace d4c
