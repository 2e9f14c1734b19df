#include "coloring.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace d4c {

int PartialColoring::domain_size() const {
  int s = 0;
  for (uint8_t c : color) s += c != 0;
  return s;
}

bool PartialColoring::proper_on(const Graph& g) const {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!color[u]) continue;
    for (int v : g.neighbors(u))
      if (v > u && color[v] == color[u]) return false;
  }
  return true;
}

bool PartialColoring::complete_proper_on(const Graph& g) const {
  for (uint8_t c : color)
    if (!c) return false;
  return proper_on(g);
}

namespace {

// Exhaustive backtracking with singleton propagation over per-vertex color
// masks. Decision queries additionally split the unassigned residue into
// connected components and solve them independently: once a gadget copy is
// separated from the rest by its colored boundary, a dead end elsewhere
// never re-enumerates the copy's interior colorings. That keeps the
// unsatisfiability proofs on the assembled graphs near-linear.
class Searcher {
 public:
  Searcher(const Graph& g, int k) : g_(g), k_(k), n_(g.vertex_count()) {
    uint8_t full = static_cast<uint8_t>((1u << k) - 1);
    dom_.assign(n_, full);
    val_.assign(n_, 0);
    assigned_nbrs_.assign(n_, 0);
    prio_.assign(n_, 0);
  }

  void set_priority(std::vector<int> p) {
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("priority size mismatch");
    prio_ = std::move(p);
  }

  // Permanent assignment (not undone by search). False on conflict.
  bool pin(int v, int c) {
    if (val_[v]) return val_[v] == c;
    if (!(dom_[v] & (1u << (c - 1)))) return false;
    return propagate(v, c);
  }

  // Decision search over the given vertex set (assigned members ignored).
  // On success the assignment is left in place; on failure everything the
  // call assigned is rolled back.
  bool solve_decision(const std::vector<int>& verts) {
    std::vector<int> open;
    for (int v : verts)
      if (!val_[v]) open.push_back(v);
    if (open.empty()) return true;
    auto comps = components(open);
    if (comps.size() > 1) {
      // Smallest component first: a tightly constrained fragment (e.g. a
      // gadget interior with its whole boundary colored) refutes cheaply.
      std::stable_sort(comps.begin(), comps.end(),
                       [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a.front() < b.front();
                       });
      size_t ma = ta_.size(), mp = tp_.size();
      for (const auto& comp : comps)
        if (!solve_decision(comp)) {
          undo_to(ma, mp);
          return false;
        }
      return true;
    }
    int v = pick(open);
    ++stats.nodes;
    uint8_t d = dom_[v];
    for (int c = 1; c <= k_; ++c) {
      if (!(d & (1u << (c - 1)))) continue;
      size_t ma = ta_.size(), mp = tp_.size();
      if (propagate(v, c) && solve_decision(open)) return true;
      undo_to(ma, mp);
    }
    return false;
  }

  // Full enumeration (no component splitting — callers need every
  // combination). visit returns false to stop; search returns false when
  // stopped early.
  bool enumerate(const std::function<bool(const std::vector<uint8_t>&)>& visit) {
    int v = -1;
    for (int u = 0; u < n_; ++u)
      if (!val_[u] && (v < 0 || better(u, v))) v = u;
    if (v < 0) return visit(val_);
    ++stats.nodes;
    uint8_t d = dom_[v];
    bool keep = true;
    for (int c = 1; c <= k_ && keep; ++c) {
      if (!(d & (1u << (c - 1)))) continue;
      size_t ma = ta_.size(), mp = tp_.size();
      if (propagate(v, c)) keep = enumerate(visit);
      undo_to(ma, mp);
    }
    return keep;
  }

  const std::vector<uint8_t>& values() const { return val_; }
  SolveStats stats;

 private:
  bool better(int a, int b) const {
    if (prio_[a] != prio_[b]) return prio_[a] < prio_[b];
    if (assigned_nbrs_[a] != assigned_nbrs_[b]) return assigned_nbrs_[a] > assigned_nbrs_[b];
    return g_.degree(a) > g_.degree(b);
  }

  int pick(const std::vector<int>& open) const {
    int best = -1;
    for (int v : open) {
      if (val_[v]) continue;
      if (best < 0 || better(v, best)) best = v;
    }
    return best;
  }

  // Connected components of the unassigned vertices in `open` (edges with
  // both ends unassigned), each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components(const std::vector<int>& open) {
    std::vector<int> sorted = open;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    if (in_comp_.empty()) in_comp_.assign(n_, 0);
    for (int seed : sorted) {
      if (in_comp_[seed]) continue;
      std::vector<int> comp;
      stack.assign(1, seed);
      in_comp_[seed] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : g_.neighbors(v))
          if (!val_[u] && !in_comp_[u]) {
            in_comp_[u] = 1;
            stack.push_back(u);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    for (const auto& c : comps)
      for (int v : c) in_comp_[v] = 0;
    return comps;
  }

  bool propagate(int v, int c) {
    std::vector<std::pair<int, int>> queue{{v, c}};
    size_t qi = 0;
    while (qi < queue.size()) {
      auto [u, cu] = queue[qi++];
      if (val_[u]) {
        if (val_[u] != cu) return false;
        continue;
      }
      val_[u] = static_cast<uint8_t>(cu);
      ta_.push_back(u);
      ++stats.propagations;
      uint8_t bit = static_cast<uint8_t>(1u << (cu - 1));
      for (int w : g_.neighbors(u)) {
        ++assigned_nbrs_[w];
        if (val_[w]) {
          if (val_[w] == cu) {
            finish_increments(u, w);
            return false;
          }
          continue;
        }
        if (dom_[w] & bit) {
          tp_.emplace_back(w, dom_[w]);
          dom_[w] = static_cast<uint8_t>(dom_[w] & ~bit);
          if (dom_[w] == 0) {
            finish_increments(u, w);
            return false;
          }
          if ((dom_[w] & (dom_[w] - 1)) == 0)
            queue.emplace_back(w, std::countr_zero(dom_[w]) + 1);
        }
      }
    }
    return true;
  }

  // Balance assigned-neighbor counters when bailing out mid-adjacency-scan,
  // so undo (which decrements for every neighbor) stays symmetric.
  void finish_increments(int u, int stop) {
    bool past = false;
    for (int w : g_.neighbors(u)) {
      if (past) ++assigned_nbrs_[w];
      if (w == stop) past = true;
    }
  }

  void undo_to(size_t ma, size_t mp) {
    while (tp_.size() > mp) {
      dom_[tp_.back().first] = tp_.back().second;
      tp_.pop_back();
    }
    while (ta_.size() > ma) {
      int v = ta_.back();
      ta_.pop_back();
      val_[v] = 0;
      for (int w : g_.neighbors(v)) --assigned_nbrs_[w];
    }
  }

  const Graph& g_;
  int k_, n_;
  std::vector<uint8_t> dom_;
  std::vector<uint8_t> val_;
  std::vector<int> assigned_nbrs_;
  std::vector<int> ta_;                        // assignment trail
  std::vector<std::pair<int, uint8_t>> tp_;    // domain-change trail
  std::vector<char> in_comp_;
  std::vector<int> prio_;
};

// First triangle in id order, or empty.
std::vector<int> find_triangle(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int w : g.neighbors(u)) {
        if (w <= v) continue;
        if (g.has_edge(v, w)) return {u, v, w};
      }
    }
  return {};
}

}  // namespace

SolveResult solve(const SolveRequest& req) {
  const Graph& g = *req.graph;
  if (req.k < 1 || req.k > 4) throw std::invalid_argument("k out of range");
  if (!req.pinned.color.empty()) {
    if (static_cast<int>(req.pinned.color.size()) != g.vertex_count())
      throw std::invalid_argument("pinned coloring size mismatch");
    if (!req.pinned.proper_on(g)) throw std::invalid_argument("pinned coloring improper");
  }
  Searcher s(g, req.k);
  if (!req.priority.empty()) s.set_priority(req.priority);
  SolveResult res;
  bool conflict = false;
  bool any_pin = false;
  for (size_t v = 0; v < req.pinned.color.size() && !conflict; ++v)
    if (req.pinned.color[v]) {
      any_pin = true;
      if (req.pinned.color[v] > req.k) throw std::invalid_argument("pinned color exceeds k");
      conflict = !s.pin(static_cast<int>(v), req.pinned.color[v]);
    }
  // Symmetry breaking: fixing one triangle's colors preserves satisfiability
  // (any proper coloring can be permuted onto the pinning) but not counts.
  if (!conflict && !any_pin && req.k >= 3 && req.mode != SolveMode::Count) {
    auto tri = find_triangle(g);
    for (size_t i = 0; i < tri.size() && !conflict; ++i)
      conflict = !s.pin(tri[i], static_cast<int>(i) + 1);
  }
  if (conflict) {
    res.satisfiable = false;
    res.stats = s.stats;
    return res;
  }
  if (req.mode == SolveMode::Count) {
    s.enumerate([&](const std::vector<uint8_t>&) {
      ++res.count;
      return true;
    });
    res.satisfiable = res.count > 0;
  } else {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (s.solve_decision(all)) {
      res.satisfiable = true;
      res.witness.color = s.values();
    }
  }
  res.stats = s.stats;
  if (res.satisfiable && req.mode != SolveMode::Count) {
    if (!res.witness.complete_proper_on(g)) throw std::logic_error("solver produced bad witness");
    for (size_t v = 0; v < req.pinned.color.size(); ++v)
      if (req.pinned.color[v] && req.pinned.color[v] != res.witness.color[v])
        throw std::logic_error("solver witness violates pinning");
  }
  return res;
}

void for_each_coloring(const Graph& g, int k, const PartialColoring& pinned,
                       const std::function<bool(const PartialColoring&)>& fn) {
  Searcher s(g, k);
  for (size_t v = 0; v < pinned.color.size(); ++v)
    if (pinned.color[v] && !s.pin(static_cast<int>(v), pinned.color[v])) return;
  s.enumerate([&](const std::vector<uint8_t>& full) {
    PartialColoring pc;
    pc.color = full;
    return fn(pc);
  });
}

int chromatic_number(const Graph& g, int cap, std::vector<int> priority) {
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int k = 2; k <= cap; ++k) {
    SolveRequest r;
    r.graph = &g;
    r.k = k;
    r.mode = SolveMode::FindOne;
    r.priority = priority;
    if (solve(r).satisfiable) return k;
  }
  return cap + 1;
}

std::string to_cnf(const SolveRequest& req) {
  const Graph& g = *req.graph;
  int n = g.vertex_count(), k = req.k;
  auto var = [&](int v, int c) { return v * k + c; };  // 1-based var ids
  std::ostringstream body;
  long clauses = 0;
  for (int v = 0; v < n; ++v) {
    for (int c = 1; c <= k; ++c) body << var(v, c) << " ";
    body << "0\n";
    ++clauses;
    for (int c1 = 1; c1 <= k; ++c1)
      for (int c2 = c1 + 1; c2 <= k; ++c2) {
        body << -var(v, c1) << " " << -var(v, c2) << " 0\n";
        ++clauses;
      }
  }
  for (const Edge& e : g.edges())
    for (int c = 1; c <= k; ++c) {
      body << -var(e.u, c) << " " << -var(e.v, c) << " 0\n";
      ++clauses;
    }
  for (size_t v = 0; v < req.pinned.color.size(); ++v)
    if (req.pinned.color[v]) {
      body << var(static_cast<int>(v), req.pinned.color[v]) << " 0\n";
      ++clauses;
    }
  std::ostringstream out;
  out << "p cnf " << n * k << " " << clauses << "\n" << body.str();
  return out.str();
}

}  // namespace d4c
