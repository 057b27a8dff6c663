// Stage-wise minimum input placement over a path/cycle decomposition.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ssc/exact.hpp"
#include "ssc/graph.hpp"
#include "ssc/pactus.hpp"

namespace ssc {

enum class StageType { PathType, TreeType, CycleType };

enum class TieBreak { SmallestId, LargestId };

// One stage of the composition: the component processed, the shape of its
// stage graph (component plus bridge stubs to not-yet-visited neighbors),
// the external targets chosen, and the nodes certified so far.
struct StageRecord {
  int component_index = 0;
  StageType type = StageType::PathType;
  std::vector<NodeId> externals_added;  // ascending
  std::vector<NodeId> ssc_nodes_after;  // cumulative union, ascending
};

struct InputPlacement {
  // New inputs in placement order, named u1, u2, ... Input ids live in their
  // own namespace, so they never collide with state node labels.
  std::vector<InputAttachment> external;
  // Component index -> nodes of already-processed components that feed it
  // across a bridge. Only components that receive any are listed.
  std::map<int, std::vector<NodeId>> component_inputs;
  std::vector<StageRecord> per_stage;
  // Targets added after the stage loop when the staged result alone did not
  // make the whole network SSC. Empty in the common case.
  std::vector<NodeId> post_additions;
};

// Deterministic processing order: BFS over the component adjacency graph
// from component 0, neighbors ascending.
std::vector<int> stage_order(const PactusDecomposition& dec);

// Nodes of component i that feed component j across their bridge, provided
// the subgraph accumulated so far is SSC (otherwise nothing propagates).
// Throws NotNeighbors when no bridge joins i and j.
std::vector<NodeId> component_input_nodes(const PactusDecomposition& dec,
                                          int i, int j,
                                          bool current_subgraph_ssc);

// Shape of the stage graph at position `stage` of stage_order(dec):
// cycle-type when it contains a cycle, else path- or tree-type.
StageType stage_type(const PactusDecomposition& dec, std::size_t stage);

// Place the fewest external inputs stage by stage so that every stage graph
// is SSC, carrying bridge endpoints forward as component inputs. `net` must
// carry no inputs yet. When the staged placement alone leaves the full
// network short of SSC (possible for branchy decompositions) and n is within
// the exact-check limit, extra targets are appended and recorded in
// post_additions; the per-stage records are left untouched.
InputPlacement min_inputs(const StructuredNetwork& net,
                          const PactusDecomposition& dec,
                          TieBreak tie_break = TieBreak::SmallestId);

// Apply placement.external to the state graph and run the exact check.
// An inaccessible result (e.g. an empty placement) reports is_ssc = false
// rather than throwing. Throws TooLarge past the exact-check limit.
SscReport verify_placement(const StructuredNetwork& net,
                           const InputPlacement& placement);

// True iff no placement with fewer externals than `placement` makes the
// network SSC; exhaustive over all target subsets of each smaller size.
// Throws TooLarge when the network exceeds `budget` nodes.
bool minimality_audit(const StructuredNetwork& net,
                      const InputPlacement& placement,
                      std::size_t budget = 12);

}  // namespace ssc
