// Structured-network data model and elementary graph queries.
//
// A structured network is the zero/nonzero pattern of a diffusively-coupled
// system: undirected edges between state nodes, one directed attachment per
// external input, and an implicit negative self-loop on every state node
// (the model has no loop-free nodes, so there is no way to declare one).
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

using NodeId = std::uint32_t;

// Subset of state nodes as a bitset over the dense index 0..n-1
// (bit k = state_labels()[k]); n is capped at 64 by build_network.
using AlphaMask = std::uint64_t;

struct InputAttachment {
  std::string id;  // e.g. "u1"; distinct from state labels by construction
  NodeId target;

  friend bool operator==(const InputAttachment&, const InputAttachment&) = default;
};

class StructuredNetwork {
 public:
  static constexpr std::size_t kMaxStateNodes = 64;

  std::size_t state_count() const { return labels_.size(); }
  const std::vector<NodeId>& state_labels() const { return labels_; }
  const std::vector<std::pair<NodeId, NodeId>>& state_edges() const { return edges_; }
  const std::vector<InputAttachment>& inputs() const { return inputs_; }

  bool has_state(NodeId label) const;
  std::size_t index_of(NodeId label) const;  // throws std::out_of_range
  NodeId label_of(std::size_t index) const { return labels_.at(index); }

  // State-state adjacency of the node at dense index, as a bitset.
  AlphaMask adjacency(std::size_t index) const { return adjacency_.at(index); }

  // Union of all input targets, as a bitset.
  AlphaMask input_target_mask() const { return input_targets_; }

  AlphaMask full_mask() const {
    return labels_.size() == 64 ? ~AlphaMask{0} : (AlphaMask{1} << labels_.size()) - 1;
  }

  AlphaMask mask_of(const std::vector<NodeId>& labels) const;
  std::vector<NodeId> labels_of(AlphaMask mask) const;

 private:
  friend StructuredNetwork build_network(std::vector<NodeId>,
                                         std::vector<std::pair<NodeId, NodeId>>,
                                         std::vector<InputAttachment>);
  StructuredNetwork() = default;

  std::vector<NodeId> labels_;  // ascending
  std::vector<std::pair<NodeId, NodeId>> edges_;  // canonical: a < b, sorted
  std::vector<InputAttachment> inputs_;           // caller order, ids unique
  std::vector<AlphaMask> adjacency_;
  AlphaMask input_targets_ = 0;
};

// Validates and canonicalizes: state nodes are deduplicated and sorted,
// duplicate undirected edges collapse, edge endpoints and input targets must
// exist, input ids must be unique, and n must be in [1, 64].
StructuredNetwork build_network(std::vector<NodeId> state_nodes,
                                std::vector<std::pair<NodeId, NodeId>> state_edges,
                                std::vector<InputAttachment> input_attachments);

// N(alpha) \ alpha over both state and input nodes.
struct NeighborSet {
  AlphaMask state = 0;               // state-node members
  std::vector<std::size_t> inputs;   // indices into net.inputs()
};
NeighborSet neighbors_of_set(const StructuredNetwork& net, AlphaMask alpha);

// True iff every state node is reachable from some input attachment.
bool is_accessible(const StructuredNetwork& net);

enum class NodeRole { Dedicated, Sharing, NotNeighbor };

// Role of the state node `label` relative to alpha; throws NodeInAlpha if the
// node is a member of alpha.
NodeRole classify_node(const StructuredNetwork& net, NodeId label, AlphaMask alpha);

// Role of the input at `input_index`; an input's only neighbor is its target.
NodeRole classify_input(const StructuredNetwork& net, std::size_t input_index,
                        AlphaMask alpha);

// True iff some node in N(alpha) \ alpha has exactly one edge into alpha.
bool has_dedicated(const StructuredNetwork& net, AlphaMask alpha);

}  // namespace ssc
