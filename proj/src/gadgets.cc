#include "gadgets.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace d4c {
namespace {

using Row = std::pair<const char*, std::vector<const char*>>;

// Frozen rotation tables: neighbor names in counterclockwise order. These
// are the single source of truth — graphs, planarity certificates, and
// outer-face boundary orders are derived from them. Vertex ids follow the
// listing order (boundary roles first).

const std::vector<Row> kF0 = {
    {"v1", {"b2", "a1"}},
    {"v2", {"m", "b2"}},
    {"w", {"a1", "m"}},
    {"a1", {"v1", "m", "w"}},
    {"b2", {"v2", "m", "v1"}},
    {"m", {"w", "a1", "b2", "v2"}},
};

const std::vector<Row> kG0 = {
    {"v1", {"c2m", "c2b2", "c1a1", "c1b2"}},
    {"v2", {"c1b2", "c1m"}},
    {"v3", {"c4a1", "c4m"}},
    {"v4", {"c3m", "c3a1", "c4b2", "c4a1"}},
    {"w1", {"c4m", "c4b2", "c3a1", "c3b2", "c2a1", "c2m"}},
    {"w2", {"c1m", "c1a1", "c2b2", "c2a1", "c3b2", "c3m"}},
    {"c1a1", {"w2", "c1m", "v1"}},
    {"c1b2", {"v1", "c1m", "v2"}},
    {"c1m", {"v2", "c1b2", "c1a1", "w2"}},
    {"c2a1", {"w2", "c2m", "w1"}},
    {"c2b2", {"v1", "c2m", "w2"}},
    {"c2m", {"w1", "c2a1", "c2b2", "v1"}},
    {"c3a1", {"v4", "c3m", "w1"}},
    {"c3b2", {"w1", "c3m", "w2"}},
    {"c3m", {"w2", "c3b2", "c3a1", "v4"}},
    {"c4a1", {"v4", "c4m", "v3"}},
    {"c4b2", {"w1", "c4m", "v4"}},
    {"c4m", {"v3", "c4a1", "c4b2", "w1"}},
};

const std::vector<Row> kG1Prime = {
    {"v1", {"Am", "Ab2"}},
    {"v2", {"Ab2", "Aa1", "Ba1", "Bb2"}},
    {"v3", {"Bb2", "Bm"}},
    {"v4", {"Aa1", "Am"}},
    {"v5", {"Bm", "Ba1"}},
    {"Aa1", {"v2", "Am", "v4", "Ba1"}},
    {"Ab2", {"v1", "Am", "v2"}},
    {"Am", {"v4", "Aa1", "Ab2", "v1"}},
    {"Ba1", {"v5", "Bm", "v2", "Aa1"}},
    {"Bb2", {"v2", "Bm", "v3"}},
    {"Bm", {"v3", "Bb2", "Ba1", "v5"}},
};

const std::vector<Row> kG1 = {
    {"v1", {"Am", "Ab2"}},
    {"v2", {"Ab2", "Aa1", "Ba1", "Bb2"}},
    {"v3", {"Bb2", "Bm"}},
    {"v4", {"c4a1", "c4m"}},
    {"v5", {"c3m", "c3a1", "c4b2", "c4a1"}},
    {"vp4", {"Aa1", "Am", "c2m", "c2b2", "c1a1", "c1b2"}},
    {"vp5", {"Bm", "Ba1", "c1b2", "c1m"}},
    {"w1", {"c4m", "c4b2", "c3a1", "c3b2", "c2a1", "c2m"}},
    {"w2", {"c1m", "c1a1", "c2b2", "c2a1", "c3b2", "c3m"}},
    {"Aa1", {"v2", "Am", "vp4", "Ba1"}},
    {"Ab2", {"v1", "Am", "v2"}},
    {"Am", {"vp4", "Aa1", "Ab2", "v1"}},
    {"Ba1", {"vp5", "Bm", "v2", "Aa1"}},
    {"Bb2", {"v2", "Bm", "v3"}},
    {"Bm", {"v3", "Bb2", "Ba1", "vp5"}},
    {"c1a1", {"w2", "c1m", "vp4"}},
    {"c1b2", {"vp4", "c1m", "vp5"}},
    {"c1m", {"vp5", "c1b2", "c1a1", "w2"}},
    {"c2a1", {"w2", "c2m", "w1"}},
    {"c2b2", {"vp4", "c2m", "w2"}},
    {"c2m", {"w1", "c2a1", "c2b2", "vp4"}},
    {"c3a1", {"v5", "c3m", "w1"}},
    {"c3b2", {"w1", "c3m", "w2"}},
    {"c3m", {"w2", "c3b2", "c3a1", "v5"}},
    {"c4a1", {"v5", "c4m", "v4"}},
    {"c4b2", {"w1", "c4m", "v5"}},
    {"c4m", {"v4", "c4a1", "c4b2", "w1"}},
};

const std::vector<Row> kG2 = {
    {"u1", {"L0", "L1", "e1"}},
    {"u2", {"d2", "d1", "L0"}},
    {"u3", {"e1", "e2"}},
    {"u4", {"e2", "R0", "d2"}},
    {"L0", {"u1", "u2", "d1"}},
    {"L1", {"u1", "d1", "e1"}},
    {"R0", {"R1", "d2", "u4"}},
    {"R1", {"e2", "m", "R0"}},
    {"d1", {"u2", "d2", "m", "L1", "L0"}},
    {"d2", {"d1", "u2", "u4", "R0", "m"}},
    {"e1", {"m", "e2", "u3", "u1", "L1"}},
    {"e2", {"u3", "e1", "m", "R1", "u4"}},
    {"m", {"d2", "R1", "e2", "e1", "d1"}},
};

struct Spec {
  const std::vector<Row>* rows;
  std::vector<const char*> boundary;
  std::vector<const char*> face_order;  // boundary on the outer face
};

Spec spec_for(ContractId id) {
  switch (id) {
    case ContractId::F0:
      return {&kF0, {"v1", "v2", "w"}, {"v1", "v2", "w"}};
    case ContractId::G0:
      return {&kG0, {"v1", "v2", "v3", "v4"}, {"v1", "v3", "v4", "v2"}};
    case ContractId::G1Prime:
      return {&kG1Prime, {"v1", "v2", "v3", "v4", "v5"}, {"v1", "v4", "v5", "v3", "v2"}};
    case ContractId::G1:
      return {&kG1, {"v1", "v2", "v3", "v4", "v5"}, {"v1", "v4", "v5", "v3", "v2"}};
    case ContractId::G2:
      return {&kG2, {"u1", "u2", "u3", "u4"}, {"u1", "u2", "u4", "u3"}};
  }
  throw std::logic_error("bad contract id");
}

bool mono3(const std::vector<int>& t) { return t[0] == t[1] && t[1] == t[2]; }

// Cyclic-sequence equality, optionally reversed.
bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  size_t n = a.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> bb = b;
    if (dir) std::reverse(bb.begin(), bb.end());
    for (size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == bb[i];
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

std::string contract_name(ContractId id) {
  switch (id) {
    case ContractId::F0: return "F0";
    case ContractId::G0: return "G0";
    case ContractId::G1Prime: return "G1prime";
    case ContractId::G1: return "G1";
    case ContractId::G2: return "G2";
  }
  throw std::logic_error("bad contract id");
}

int GadgetBlueprint::vertex_of(const std::string& name) const {
  for (size_t i = 0; i < vertex_names.size(); ++i)
    if (vertex_names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown gadget vertex: " + name);
}

GadgetBlueprint build_gadget(ContractId kind) {
  Spec sp = spec_for(kind);
  GadgetBlueprint bp;
  bp.contract = kind;
  std::map<std::string, int> id;
  for (const Row& r : *sp.rows) {
    bp.vertex_names.emplace_back(r.first);
    id[r.first] = static_cast<int>(bp.vertex_names.size()) - 1;
  }
  int n = static_cast<int>(bp.vertex_names.size());
  std::vector<Edge> edges;
  bp.rotation.assign(n, {});
  for (const Row& r : *sp.rows) {
    int u = id.at(r.first);
    for (const char* nb : r.second) {
      auto it = id.find(nb);
      if (it == id.end()) throw std::logic_error("rotation names unknown vertex");
      bp.rotation[u].push_back(it->second);
      if (u < it->second) edges.emplace_back(u, it->second);
    }
  }
  bp.graph = Graph::build(n, edges);
  check_rotation(bp.graph, bp.rotation);
  for (const char* b : sp.boundary) {
    bp.boundary_names.emplace_back(b);
    bp.boundary.push_back(id.at(b));
  }
  for (const char* b : sp.face_order) bp.boundary_face_order.push_back(id.at(b));
  int local = 0;
  for (int v = 0; v < n; ++v) {
    if (std::find(bp.boundary.begin(), bp.boundary.end(), v) != bp.boundary.end())
      bp.graph.set_label(v, Label::boundary(bp.vertex_names[v]));
    else
      bp.graph.set_label(v, Label::internal(contract_name(kind), local++));
  }
  return bp;
}

ExtensionTable extension_table(const GadgetBlueprint& bp) {
  ExtensionTable table;
  int b = static_cast<int>(bp.boundary.size());
  table.boundary_size = b;
  std::vector<int> tuple(b, 1);
  while (true) {
    PartialColoring pin(bp.graph.vertex_count());
    for (int i = 0; i < b; ++i) pin.color[bp.boundary[i]] = static_cast<uint8_t>(tuple[i]);
    if (pin.proper_on(bp.graph)) {
      SolveRequest req;
      req.graph = &bp.graph;
      req.k = 3;
      req.pinned = pin;
      if (solve(req).satisfiable) table.accepted.push_back(tuple);
    }
    int i = b - 1;
    while (i >= 0 && tuple[i] == 3) tuple[i--] = 1;
    if (i < 0) break;
    ++tuple[i];
  }
  return table;
}

bool contract_accepts(ContractId id, const std::vector<int>& t) {
  switch (id) {
    case ContractId::F0:
      return (t[0] == t[1] && t[1] == t[2]) || (t[0] != t[1] && t[0] != t[2]);
    case ContractId::G0:
      return (t[0] == t[1] && t[1] == t[2] && t[2] == t[3]) ||
             (t[0] != t[1] && t[2] != t[3]);
    case ContractId::G1Prime:  // upper envelope only; exact set is narrower
    case ContractId::G1:
      if (mono3(t)) return t[3] == t[4] && t[4] == t[0];
      return t[3] != t[4];
    case ContractId::G2:
      return t[1] == t[2] && ((t[0] == t[1]) != (t[2] == t[3]));
  }
  throw std::logic_error("bad contract id");
}

namespace {

bool fail(std::string* diag, const std::string& why) {
  if (diag) *diag = why;
  return false;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

bool verify_contract(const GadgetBlueprint& bp, std::string* diag) {
  // 1. Extension table versus predicate.
  ExtensionTable table = extension_table(bp);
  int b = table.boundary_size;
  std::vector<std::vector<int>> accepted = table.accepted;
  std::sort(accepted.begin(), accepted.end());
  {
    std::vector<int> t(b, 1);
    size_t ai = 0;
    while (true) {
      bool in_table = ai < accepted.size() && accepted[ai] == t;
      bool pred = contract_accepts(bp.contract, t);
      if (in_table) ++ai;
      if (bp.contract == ContractId::G1Prime) {
        if (in_table && !pred)
          return fail(diag, "G1prime accepts tuple outside envelope " + tuple_str(t));
      } else if (in_table != pred) {
        return fail(diag, contract_name(bp.contract) + " mismatch at tuple " +
                              tuple_str(t) + (pred ? " (should extend)" : " (should not extend)"));
      }
      int i = b - 1;
      while (i >= 0 && t[i] == 3) t[i--] = 1;
      if (i < 0) break;
      ++t[i];
    }
  }
  if (bp.contract == ContractId::G1Prime) {
    // Every coloring of (v1,v2,v3) must extend.
    std::vector<std::vector<int>> proj;
    for (const auto& t : accepted) proj.push_back({t[0], t[1], t[2]});
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    if (proj.size() != 27)
      return fail(diag, "G1prime: only " + std::to_string(proj.size()) +
                            " of 27 (v1,v2,v3) tuples extend");
  }

  // 2. Universal claims over every full 3-coloring.
  bool claims_ok = true;
  std::string claim_why;
  auto B = [&](int i) { return bp.boundary[i]; };
  for_each_coloring(bp.graph, 3, PartialColoring(), [&](const PartialColoring& pc) {
    auto c = [&](int i) { return pc.color[B(i)]; };
    switch (bp.contract) {
      case ContractId::F0:
        if ((c(0) == c(1)) != (c(0) == c(2))) {
          claims_ok = false;
          claim_why = "F0: v1=v2 and v1=w disagree in a full coloring";
        }
        break;
      case ContractId::G1Prime:
      case ContractId::G1:
        if (c(0) == c(1) && c(1) == c(2)) {
          if (!(c(3) == c(4) && c(4) == c(1))) {
            claims_ok = false;
            claim_why = contract_name(bp.contract) + ": monochromatic v1v2v3 failed to force v4=v5=v2";
          }
        } else if (c(3) == c(4)) {
          claims_ok = false;
          claim_why = contract_name(bp.contract) + ": non-monochromatic v1v2v3 allows v4=v5";
        }
        break;
      case ContractId::G2:
        if (c(1) != c(2)) {
          claims_ok = false;
          claim_why = "G2: coloring with u2 != u3";
        } else if ((c(0) == c(1)) == (c(2) == c(3))) {
          claims_ok = false;
          claim_why = "G2: u1=u2 / u3=u4 not exclusive";
        }
        break;
      case ContractId::G0:
        break;
    }
    return claims_ok;
  });
  if (!claims_ok) return fail(diag, claim_why);

  // 3. The gadget itself is 3-colorable.
  SolveRequest req;
  req.graph = &bp.graph;
  req.k = 3;
  if (!solve(req).satisfiable) return fail(diag, contract_name(bp.contract) + " not 3-colorable");

  // 4. Planarity with the boundary on a common face, in the frozen order.
  if (!verify_genus_zero(bp.graph, bp.rotation))
    return fail(diag, contract_name(bp.contract) + " rotation is not genus 0");
  bool face_ok = false;
  for (const auto& walk : trace_faces(bp.graph, bp.rotation)) {
    std::vector<int> on_face;
    for (int v : walk)
      if (std::find(bp.boundary.begin(), bp.boundary.end(), v) != bp.boundary.end())
        on_face.push_back(v);
    if (on_face.size() == bp.boundary.size() &&
        cyclic_match(on_face, bp.boundary_face_order)) {
      face_ok = true;
      break;
    }
  }
  if (!face_ok)
    return fail(diag, contract_name(bp.contract) + ": boundary not on a common face in order");
  return true;
}

std::string boundary_manifest_json(const GadgetBlueprint& bp) {
  nlohmann::json j;
  j["gadget"] = contract_name(bp.contract);
  j["vertices"] = bp.graph.vertex_count();
  j["edges"] = bp.graph.edge_count();
  nlohmann::json b = nlohmann::json::array();
  for (size_t i = 0; i < bp.boundary.size(); ++i)
    b.push_back({{"name", bp.boundary_names[i]}, {"id", bp.boundary[i]}});
  j["boundary"] = b;
  nlohmann::json fo = nlohmann::json::array();
  for (int v : bp.boundary_face_order) fo.push_back(bp.vertex_names[v]);
  j["outer_face_order"] = fo;
  return j.dump(2);
}

}  // namespace d4c
