#include "ssc/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ssc {

bool StructuredNetwork::has_state(NodeId label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t StructuredNetwork::index_of(NodeId label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw std::out_of_range("unknown state node " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

AlphaMask StructuredNetwork::mask_of(const std::vector<NodeId>& labels) const {
  AlphaMask mask = 0;
  for (NodeId label : labels) mask |= AlphaMask{1} << index_of(label);
  return mask;
}

std::vector<NodeId> StructuredNetwork::labels_of(AlphaMask mask) const {
  std::vector<NodeId> out;
  while (mask) {
    int k = std::countr_zero(mask);
    out.push_back(labels_[static_cast<std::size_t>(k)]);
    mask &= mask - 1;
  }
  return out;
}

StructuredNetwork build_network(std::vector<NodeId> state_nodes,
                                std::vector<std::pair<NodeId, NodeId>> state_edges,
                                std::vector<InputAttachment> input_attachments) {
  if (state_nodes.empty()) throw EmptyStateSet();

  StructuredNetwork net;
  std::sort(state_nodes.begin(), state_nodes.end());
  state_nodes.erase(std::unique(state_nodes.begin(), state_nodes.end()),
                    state_nodes.end());
  if (state_nodes.size() > StructuredNetwork::kMaxStateNodes)
    throw TooLarge("network has " + std::to_string(state_nodes.size()) +
                   " state nodes; the bitset representation caps at 64");
  net.labels_ = std::move(state_nodes);
  net.adjacency_.assign(net.labels_.size(), 0);

  std::set<std::pair<NodeId, NodeId>> canonical;
  for (auto [a, b] : state_edges) {
    if (a == b)
      throw DanglingEdge("self-pair edge (" + std::to_string(a) + "," +
                         std::to_string(b) + "); self-loops are implicit");
    if (!net.has_state(a) || !net.has_state(b))
      throw DanglingEdge("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") references an unknown state node");
    canonical.emplace(std::min(a, b), std::max(a, b));
  }
  net.edges_.assign(canonical.begin(), canonical.end());
  for (auto [a, b] : net.edges_) {
    std::size_t ia = net.index_of(a), ib = net.index_of(b);
    net.adjacency_[ia] |= AlphaMask{1} << ib;
    net.adjacency_[ib] |= AlphaMask{1} << ia;
  }

  std::set<std::string> seen_ids;
  for (const auto& att : input_attachments) {
    if (!seen_ids.insert(att.id).second)
      throw DuplicateInputAttachment("input " + att.id + " is attached more than once");
    if (!net.has_state(att.target))
      throw DanglingEdge("input " + att.id + " targets unknown state node " +
                         std::to_string(att.target));
    net.input_targets_ |= AlphaMask{1} << net.index_of(att.target);
  }
  net.inputs_ = std::move(input_attachments);
  return net;
}

NeighborSet neighbors_of_set(const StructuredNetwork& net, AlphaMask alpha) {
  NeighborSet out;
  for (std::size_t i = 0; i < net.state_count(); ++i) {
    AlphaMask bit = AlphaMask{1} << i;
    if ((alpha & bit) == 0 && (net.adjacency(i) & alpha) != 0) out.state |= bit;
  }
  const auto& inputs = net.inputs();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    AlphaMask target_bit = AlphaMask{1} << net.index_of(inputs[k].target);
    if (alpha & target_bit) out.inputs.push_back(k);
  }
  return out;
}

bool is_accessible(const StructuredNetwork& net) {
  AlphaMask reached = net.input_target_mask();
  for (;;) {
    AlphaMask next = reached;
    AlphaMask frontier = reached;
    while (frontier) {
      int k = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= net.adjacency(static_cast<std::size_t>(k));
    }
    if (next == reached) break;
    reached = next;
  }
  return reached == net.full_mask();
}

NodeRole classify_node(const StructuredNetwork& net, NodeId label, AlphaMask alpha) {
  std::size_t i = net.index_of(label);
  if (alpha & (AlphaMask{1} << i))
    throw NodeInAlpha("state node " + std::to_string(label) + " is a member of alpha");
  int degree_into_alpha = std::popcount(net.adjacency(i) & alpha);
  if (degree_into_alpha == 0) return NodeRole::NotNeighbor;
  return degree_into_alpha == 1 ? NodeRole::Dedicated : NodeRole::Sharing;
}

NodeRole classify_input(const StructuredNetwork& net, std::size_t input_index,
                        AlphaMask alpha) {
  const auto& att = net.inputs().at(input_index);
  AlphaMask target_bit = AlphaMask{1} << net.index_of(att.target);
  return (alpha & target_bit) ? NodeRole::Dedicated : NodeRole::NotNeighbor;
}

bool has_dedicated(const StructuredNetwork& net, AlphaMask alpha) {
  if (net.input_target_mask() & alpha) return true;  // that input is dedicated
  for (std::size_t i = 0; i < net.state_count(); ++i) {
    AlphaMask bit = AlphaMask{1} << i;
    if ((alpha & bit) == 0 && std::popcount(net.adjacency(i) & alpha) == 1)
      return true;
  }
  return false;
}

}  // namespace ssc
