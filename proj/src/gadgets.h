#pragma once
// The five boundary gadgets. Each blueprint is frozen as a rotation system
// (cyclic neighbor lists); the graph, the planarity certificate, and the
// outer-face boundary order are all derived from it. Contracts are checked
// exhaustively against the derived graph.

#include <string>
#include <vector>

#include "coloring.h"
#include "embedding.h"
#include "graph.h"

namespace d4c {

enum class ContractId { F0, G0, G1Prime, G1, G2 };

std::string contract_name(ContractId id);

struct GadgetBlueprint {
  ContractId contract;
  Graph graph;
  std::vector<std::string> vertex_names;  // id -> name
  std::vector<std::string> boundary_names;
  std::vector<int> boundary;  // ids, in tuple order (v1..; u1..)
  // Cyclic order in which the boundary appears on the outer face.
  std::vector<int> boundary_face_order;
  RotationSystem rotation;

  int vertex_of(const std::string& name) const;  // throws if unknown
};

GadgetBlueprint build_gadget(ContractId kind);

struct ExtensionTable {
  int boundary_size = 0;
  std::vector<std::vector<int>> accepted;  // sorted tuples of colors 1..3
};

// Exact: a tuple is accepted iff pinning it on the boundary leaves the
// whole gadget 3-colorable.
ExtensionTable extension_table(const GadgetBlueprint& bp);

// The lemma predicate for the contract. For G1Prime the predicate is only
// an upper envelope (see verify_contract); for the others it is exact.
bool contract_accepts(ContractId id, const std::vector<int>& tuple);

// True iff:
//  - the extension table matches the contract (exactly, except G1Prime:
//    accepted within the envelope, every (v1,v2,v3) tuple extendable, and
//    the forced v4/v5 behavior holds in every full coloring),
//  - the rotation is genus 0 with the boundary on one face in the frozen
//    cyclic order,
//  - the gadget itself is 3-colorable,
//  - the gadget-specific universal claims hold in every full 3-coloring
//    (F0: v1=v2 <=> v1=w; G1/G1Prime: v4,v5 forced by v1..v3;
//     G2: u2=u3 and exactly one of u1=u2, u3=u4).
// On failure, *diag (if given) describes the first violation.
bool verify_contract(const GadgetBlueprint& bp, std::string* diag = nullptr);

// Sidecar manifest: ordered boundary names -> vertex ids, plus sizes.
std::string boundary_manifest_json(const GadgetBlueprint& bp);

}  // namespace d4c
