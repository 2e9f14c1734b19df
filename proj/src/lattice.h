#pragma once
// The n x n diamond lattice: rows of x-vertices joined through stripes of
// y-vertices, every quad {x(i,j), x(i+1,j), y(i,j), y(i,j+1)} inducing K4
// minus the y-y edge. Row colorings (motif/smear/pattern) feed the
// criticality witnesses.

#include "coloring.h"
#include "graph.h"

namespace d4c {

struct LatticeHandle {
  int n = 0;
  Graph graph;

  // 1-based coordinates: x over i,j in [n]; y over i in [n-1], j in [n+1].
  int x(int i, int j) const;
  int y(int i, int j) const;
  int vertex_count() const { return 2 * n * n - 1; }
};

LatticeHandle build_lattice(int n);  // throws for n < 2

enum class RowKind { Motif, Smear, Pattern };

// Colors exactly row t of the x-grid:
//   Motif:   a everywhere except color b at column s (requires a != b)
//   Smear:   a everywhere (s, b ignored)
//   Pattern: a on columns 1..s, b on columns s+1..n (requires a != b)
PartialColoring row_coloring(const LatticeHandle& lat, RowKind kind, int t,
                             int a, int s = 0, int b = 0);

// Exhaustive check over all 3-colorings of `g` (laid out like `lat`):
// every stripe is monochromatic, and the end rows agree on which column
// pairs share a color. `g` defaults to the lattice itself; passing a
// mutated copy exercises the negative direction.
bool verify_endrow_transfer(const LatticeHandle& lat, const Graph& g);
bool verify_endrow_transfer(const LatticeHandle& lat);

}  // namespace d4c
