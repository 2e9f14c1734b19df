#pragma once
// Per-edge criticality: constructed witness colorings for the lattice
// edges, solver fallback everywhere else, 4-critical subgraph extraction,
// and the density table.

#include <optional>
#include <string>
#include <vector>

#include "assembly.h"

namespace d4c {

struct CriticalityReport {
  Edge edge{0, 1};
  bool critical = false;
  PartialColoring witness;  // proper 3-coloring of G_n - e when critical
  enum class Method { ConstructedWitness, Solver } method = Method::Solver;
};

// Lemma-style witness for the vertical edge x(i,j)x(i+1,j): alternating
// motifs below the break, smears above, stripes color 3. Proper on
// L_n - e, top row monochromatic, bottom row not.
PartialColoring witness_vertical(const GnHandle& h, int i, int j);

// Witness for a diagonal edge. Canonical form is x(i,j)-y(i-1,j+1) with
// i >= 2, j in [n-1]; the three mirrored orientations are mapped onto it
// by the lattice's automorphisms (the mirrors are not automorphisms of
// G_n, so mirrored witnesses must be re-verified by the caller).
// Returns nothing for edges incident to a degree-2 vertex.
std::optional<PartialColoring> witness_diagonal(const GnHandle& h, const Edge& e);

CriticalityReport is_critical(const GnHandle& h, const Edge& e);

// Deletes non-critical edges until every remaining edge is critical;
// drops isolated vertices. Requires chi(g) = 4 (throws otherwise).
// A single pass in edge-id order suffices: deleting a non-critical edge
// keeps chi at 4 and cannot make a critical edge non-critical (G - e - f
// is a subgraph of G - e, so it stays 3-colorable).
Graph extract_4_critical(const Graph& g);

// Same reduction for an assembled G_n. The guaranteed lattice edges are
// confirmed by constructed witnesses up front (a witness proper on G_n - e
// stays proper on every subgraph, so those edges never leave the graph);
// only the remaining edges go through solver checks.
Graph extract_4_critical(const GnHandle& h);

struct DensityRow {
  int n = 0;
  long gn_vertices = 0, gn_edges = 0;
  long qn_vertices = 0, qn_edges = 0;  // 0 when symbolic
  double qn_ratio = 0.0;               // |E(Q_n)| / |V(Q_n)|
  double guaranteed_bound = 0.0;       // (5n^2-9n+4) / (2n^2+an+b)
  bool symbolic = false;               // extraction skipped (budget)
};

// Rows for n in [n_from, n_to]. Extraction runs only while the per-row
// budget allows; later rows carry the formula bound alone.
std::vector<DensityRow> density_report(int n_from, int n_to, const GadgetSet& gs,
                                       double budget_secs = 600.0);

// Smallest n at which the guaranteed bound reaches `target` and stays
// there (the bound is eventually increasing toward 5/2).
int bound_threshold(int k1, int k2, double target = 2.4);

double guaranteed_bound(int n, int k1, int k2);

}  // namespace d4c
