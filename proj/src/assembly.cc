#include "assembly.h"

#include <algorithm>
#include <stdexcept>

namespace d4c {

GadgetSet default_gadget_set(bool verify) {
  GadgetSet gs;
  gs.g1 = build_gadget(ContractId::G1);
  gs.g2 = build_gadget(ContractId::G2);
  if (verify) {
    std::string why;
    if (!verify_contract(gs.g1, &why)) throw std::runtime_error("G1 contract: " + why);
    if (!verify_contract(gs.g2, &why)) throw std::runtime_error("G2 contract: " + why);
    gs.certified = true;
  }
  return gs;
}

namespace {

struct Builder {
  int next_id;
  std::vector<Edge> edges;
  std::vector<Label> labels;

  int fresh(Label l) {
    labels.push_back(std::move(l));
    return next_id++;
  }

  // Instantiate a blueprint copy: `roles` maps boundary names to existing
  // ids; everything else gets fresh vertices in blueprint id order.
  CopyInfo add_copy(const GadgetBlueprint& bp, const std::string& name,
                    const std::map<std::string, int>& roles,
                    std::map<std::string, int>* chain,
                    const std::map<std::string, std::string>& fresh_boundary) {
    CopyInfo ci;
    ci.name = name;
    ci.kind = bp.contract;
    int nv = bp.graph.vertex_count();
    ci.local_to_global.assign(nv, -1);
    int local = 0;
    for (int v = 0; v < nv; ++v) {
      const std::string& nm = bp.vertex_names[v];
      auto it = roles.find(nm);
      if (it != roles.end()) {
        ci.local_to_global[v] = it->second;
        ci.roles[nm] = it->second;
      } else if (auto fb = fresh_boundary.find(nm); fb != fresh_boundary.end()) {
        int id = fresh(Label::boundary(fb->second));
        ci.local_to_global[v] = id;
        ci.roles[nm] = id;
        (*chain)[fb->second] = id;
      } else {
        ci.local_to_global[v] = fresh(Label::internal(name, local++));
      }
    }
    for (const Edge& e : bp.graph.edges())
      edges.emplace_back(ci.local_to_global[e.u], ci.local_to_global[e.v]);
    return ci;
  }
};

void check_connected(const Graph& g) {
  if (g.vertex_count() == 0) return;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  if (cnt != g.vertex_count()) throw std::logic_error("assembled graph disconnected");
}

}  // namespace

GnHandle build_gn(int n, const GadgetSet& gs, bool include_h) {
  if (n < 4) throw std::invalid_argument("G_n needs n >= 4");
  if (!gs.certified) throw std::invalid_argument("gadget set not certified");
  GnHandle h;
  h.n = n;
  h.lattice = build_lattice(n);
  h.k1 = gs.g1.graph.vertex_count();
  h.k2 = gs.g2.graph.vertex_count();
  h.has_closing_copy = include_h;

  Builder b;
  b.next_id = h.lattice.vertex_count();
  b.edges = h.lattice.graph.edges();
  b.labels.reserve(b.next_id);
  for (int v = 0; v < b.next_id; ++v) b.labels.push_back(h.lattice.graph.label(v));

  auto chain_name = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  // One gadget chain per end row: (c0,c1) = (s,t) along row 1, (p,q) along
  // row n. Copy k consumes x(row, k+2) and the previous copy's output pair.
  auto add_chain = [&](int row, char c0, char c1, const std::string& prefix) {
    for (int k = 1; k <= n - 2; ++k) {
      std::map<std::string, int> roles;
      if (k == 1) {
        roles["v1"] = h.lattice.x(row, 1);
        roles["v2"] = h.lattice.x(row, 2);
        roles["v3"] = h.lattice.x(row, 3);
      } else {
        roles["v1"] = h.chain.at(chain_name(c0, k));
        roles["v2"] = h.chain.at(chain_name(c1, k));
        roles["v3"] = h.lattice.x(row, k + 2);
      }
      std::map<std::string, std::string> fresh{{"v4", chain_name(c0, k + 1)},
                                               {"v5", chain_name(c1, k + 1)}};
      h.copies.push_back(b.add_copy(gs.g1, prefix + std::to_string(k), roles, &h.chain, fresh));
    }
  };
  add_chain(1, 's', 't', "F");
  add_chain(n, 'p', 'q', "H");
  if (include_h) {
    std::map<std::string, int> roles{{"u1", h.chain.at(chain_name('s', n - 1))},
                                     {"u2", h.chain.at(chain_name('t', n - 1))},
                                     {"u3", h.chain.at(chain_name('p', n - 1))},
                                     {"u4", h.chain.at(chain_name('q', n - 1))}};
    h.copies.push_back(b.add_copy(gs.g2, "H", roles, &h.chain, {}));
  }

  h.graph = Graph::build(b.next_id, b.edges);
  for (int v = 0; v < b.next_id; ++v) h.graph.set_label(v, b.labels[v]);
  h.graph.check_consistent();
  check_connected(h.graph);

  if (include_h) {
    long a = 2L * (h.k1 - 3), bb = h.k2 - 4L * h.k1 + 7;
    if (h.graph.vertex_count() != 2L * n * n + a * n + bb)
      throw std::logic_error("vertex count disagrees with 2n^2+an+b");
  }
  return h;
}

std::optional<PartialColoring> monochromatic_extension(
    const GnHandle& h, const PartialColoring& phi, const std::vector<Edge>& X) {
  if (static_cast<int>(phi.color.size()) != h.lattice.vertex_count())
    throw std::invalid_argument("phi must be indexed by lattice ids");
  Graph g = h.graph;
  for (const Edge& e : X) g = g.without_edge(e);
  {
    Graph lat = h.lattice.graph;
    for (const Edge& e : X) lat = lat.without_edge(e);
    if (!phi.proper_on(lat)) throw std::invalid_argument("phi not proper on L_n - X");
    for (uint8_t c : phi.color)
      if (!c) throw std::invalid_argument("phi must color all of L_n");
  }
  SolveRequest req;
  req.graph = &g;
  req.k = 3;
  req.priority = branch_priorities(g);
  req.pinned = PartialColoring(g.vertex_count());
  std::copy(phi.color.begin(), phi.color.end(), req.pinned.color.begin());
  SolveResult res = solve(req);
  if (!res.satisfiable) return std::nullopt;
  return res.witness;
}

std::vector<int> branch_priorities(const Graph& g) {
  // Chain names are s2..s_{n-1} etc.; rank the pairs from the closing copy
  // backwards. Settling the closing copy's boundary first lets its interior
  // reject most 4-tuples before any chain work, and the surviving forced
  // values then propagate backwards through the copies one at a time.
  int max_idx = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.label(v).kind == Label::Kind::Boundary)
      max_idx = std::max(max_idx, std::stoi(g.label(v).name.substr(1)));
  std::vector<int> prio(g.vertex_count(), 1u << 20);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Label& l = g.label(v);
    switch (l.kind) {
      case Label::Kind::LatticeX:
      case Label::Kind::LatticeY:
        prio[v] = 0;
        break;
      case Label::Kind::Boundary:
        prio[v] = 1 + max_idx - std::stoi(l.name.substr(1));
        break;
      default:
        break;  // gadget interiors keep the sentinel rank
    }
  }
  return prio;
}

std::vector<Edge> guaranteed_critical_edges(const GnHandle& h) {
  const LatticeHandle& lat = h.lattice;
  int n = lat.n;
  std::vector<Edge> out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) out.emplace_back(lat.x(i, j), lat.x(i + 1, j));
  // Diagonals avoiding the degree-2 stripe ends y(i,1), y(i,n+1).
  for (int i = 1; i < n; ++i)
    for (int j = 2; j <= n; ++j) {
      int y = lat.y(i, j);
      out.emplace_back(lat.x(i, j - 1), y);
      out.emplace_back(lat.x(i + 1, j - 1), y);
      out.emplace_back(lat.x(i, j), y);
      out.emplace_back(lat.x(i + 1, j), y);
    }
  std::sort(out.begin(), out.end());
  if (out.size() != static_cast<size_t>(5 * n * n - 9 * n + 4))
    throw std::logic_error("guaranteed edge count mismatch");
  return out;
}

}  // namespace d4c
