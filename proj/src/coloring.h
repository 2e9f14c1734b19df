#pragma once
// Exact k-colorability (k <= 4) with pinned partial colorings.
// Exhaustive backtracking with singleton propagation; fully deterministic.

#include <functional>
#include <optional>
#include <vector>

#include "graph.h"

namespace d4c {

struct PartialColoring {
  // 0 = unassigned, otherwise a color in 1..k.
  std::vector<uint8_t> color;

  PartialColoring() = default;
  explicit PartialColoring(int n) : color(n, 0) {}
  bool assigned(int v) const { return color[v] != 0; }
  int domain_size() const;
  // Proper on every edge with both ends assigned.
  bool proper_on(const Graph& g) const;
  // Fully assigned and proper.
  bool complete_proper_on(const Graph& g) const;
};

enum class SolveMode { FindOne, ProveNone, Count };

struct SolveStats {
  long nodes = 0;
  long propagations = 0;
};

struct SolveRequest {
  const Graph* graph = nullptr;
  int k = 3;
  PartialColoring pinned;  // empty domain allowed
  SolveMode mode = SolveMode::FindOne;
  // Optional branch ordering, one rank per vertex (lower branches first;
  // ties fall back to the most-constrained heuristic). Ranking separator
  // vertices below the regions they separate lets the search settle each
  // region independently once its boundary is colored.
  std::vector<int> priority;
};

struct SolveResult {
  bool satisfiable = false;
  PartialColoring witness;  // valid when satisfiable and mode != Count
  long count = 0;           // valid in Count mode
  SolveStats stats;
};

SolveResult solve(const SolveRequest& req);

// Visits every proper k-coloring extending `pinned`; callback returns false to
// stop early. No symmetry breaking (colorings are enumerated verbatim).
void for_each_coloring(const Graph& g, int k, const PartialColoring& pinned,
                       const std::function<bool(const PartialColoring&)>& fn);

// Smallest k <= cap admitting a proper coloring, else cap+1.
int chromatic_number(const Graph& g, int cap = 4, std::vector<int> priority = {});

// DIMACS CNF of the request (direct encoding: variable per (vertex,color)).
std::string to_cnf(const SolveRequest& req);

}  // namespace d4c
