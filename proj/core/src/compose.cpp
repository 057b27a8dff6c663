#include "ssc/compose.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ssc/errors.hpp"
#include "subset_scan.hpp"

namespace ssc {
namespace {

using Edge = std::pair<NodeId, NodeId>;

// Component plus bridge stubs: edges to visited neighbors turn into attached
// nodes (the inside endpoint behaves like an input target), edges to
// unvisited neighbors bring the far endpoint in as a leaf.
struct StageGraph {
  std::vector<NodeId> nodes;            // ascending
  std::vector<Edge> edges;
  std::vector<NodeId> attached_inside;  // endpoints fed from visited components
  std::vector<NodeId> incoming;         // the feeding nodes on the visited side
};

StageGraph build_stage(const PactusDecomposition& dec, int comp,
                       const std::vector<bool>& visited) {
  const Component& c = dec.components[static_cast<std::size_t>(comp)];
  std::set<NodeId> node_set(c.nodes.begin(), c.nodes.end());
  StageGraph sg;
  sg.edges = c.edges;
  for (int nb : dec.neighbors[static_cast<std::size_t>(comp)]) {
    auto key = std::make_pair(std::min(comp, nb), std::max(comp, nb));
    for (auto [a, b] : dec.bridges.at(key).edges) {
      NodeId inside = dec.component_of(a) == comp ? a : b;
      NodeId outside = inside == a ? b : a;
      if (visited[static_cast<std::size_t>(nb)]) {
        sg.attached_inside.push_back(inside);
        sg.incoming.push_back(outside);
      } else {
        node_set.insert(outside);
        sg.edges.emplace_back(inside, outside);
      }
    }
  }
  sg.nodes.assign(node_set.begin(), node_set.end());
  std::sort(sg.attached_inside.begin(), sg.attached_inside.end());
  sg.attached_inside.erase(
      std::unique(sg.attached_inside.begin(), sg.attached_inside.end()),
      sg.attached_inside.end());
  std::sort(sg.incoming.begin(), sg.incoming.end());
  return sg;
}

StageType classify(const StageGraph& sg) {
  if (sg.edges.size() >= sg.nodes.size()) return StageType::CycleType;
  std::map<NodeId, int> degree;
  for (auto [a, b] : sg.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (const auto& [v, d] : degree)
    if (d > 2) return StageType::TreeType;
  return StageType::PathType;
}

detail::FlatPattern stage_pattern(const StageGraph& sg,
                                  std::map<NodeId, std::size_t>& index) {
  index.clear();
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) index[sg.nodes[i]] = i;
  detail::FlatPattern p;
  p.adjacency.assign(sg.nodes.size(), 0);
  for (auto [a, b] : sg.edges) {
    p.adjacency[index.at(a)] |= AlphaMask{1} << index.at(b);
    p.adjacency[index.at(b)] |= AlphaMask{1} << index.at(a);
  }
  return p;
}

// Visit the k-subsets of {0..pool-1} in lexicographic order until fn accepts.
template <typename Fn>
bool first_combination(std::size_t pool, std::size_t k, Fn&& fn) {
  if (k > pool) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (fn(idx)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == pool - k + (pos - 1)) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_state_only(const StructuredNetwork& net, const char* who) {
  if (!net.inputs().empty())
    throw std::invalid_argument(std::string(who) +
                                " expects a network without inputs");
}

// The decomposition must describe exactly this network.
void require_matching(const StructuredNetwork& net,
                      const PactusDecomposition& dec) {
  std::size_t covered = 0;
  std::vector<Edge> dec_edges;
  for (const auto& comp : dec.components) {
    covered += comp.nodes.size();
    for (NodeId v : comp.nodes)
      if (!net.has_state(v))
        throw NotAPactus("decomposition names node " + std::to_string(v) +
                         " which is not in the network");
    dec_edges.insert(dec_edges.end(), comp.edges.begin(), comp.edges.end());
  }
  if (covered != net.state_count())
    throw NotAPactus("decomposition does not cover the network");
  for (const auto& [key, bridge] : dec.bridges)
    for (auto [a, b] : bridge.edges)
      dec_edges.push_back(std::minmax(a, b));
  std::sort(dec_edges.begin(), dec_edges.end());
  if (dec_edges != net.state_edges())
    throw NotAPactus("decomposition edges do not match the network");
}

}  // namespace

std::vector<int> stage_order(const PactusDecomposition& dec) {
  std::vector<int> order;
  if (dec.components.empty()) return order;
  std::vector<bool> seen(dec.components.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    order.push_back(c);
    for (int nb : dec.neighbors[static_cast<std::size_t>(c)]) {
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = true;
        queue.push_back(nb);
      }
    }
  }
  if (order.size() != dec.components.size())
    throw NotAPactus("component adjacency is disconnected");
  return order;
}

std::vector<NodeId> component_input_nodes(const PactusDecomposition& dec,
                                          int i, int j,
                                          bool current_subgraph_ssc) {
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto it = dec.bridges.find(key);
  if (i == j || it == dec.bridges.end())
    throw NotNeighbors("components " + std::to_string(i) + " and " +
                       std::to_string(j) + " share no bridge");
  if (!current_subgraph_ssc) return {};
  std::vector<NodeId> out;
  for (auto [a, b] : it->second.edges)
    out.push_back(dec.component_of(a) == i ? a : b);
  std::sort(out.begin(), out.end());
  return out;
}

StageType stage_type(const PactusDecomposition& dec, std::size_t stage) {
  std::vector<int> order = stage_order(dec);
  if (stage >= order.size())
    throw std::out_of_range("stage index out of range");
  std::vector<bool> visited(dec.components.size(), false);
  for (std::size_t s = 0; s < stage; ++s)
    visited[static_cast<std::size_t>(order[s])] = true;
  return classify(build_stage(dec, order[stage], visited));
}

InputPlacement min_inputs(const StructuredNetwork& net,
                          const PactusDecomposition& dec,
                          TieBreak tie_break) {
  require_state_only(net, "min_inputs");
  require_matching(net, dec);

  std::vector<int> order = stage_order(dec);
  std::vector<bool> visited(dec.components.size(), false);
  InputPlacement placement;
  AlphaMask cumulative = 0;

  for (int comp : order) {
    StageGraph sg = build_stage(dec, comp, visited);
    if (!sg.incoming.empty()) placement.component_inputs[comp] = sg.incoming;

    std::map<NodeId, std::size_t> index;
    detail::FlatPattern pattern = stage_pattern(sg, index);
    AlphaMask attached = 0;
    for (NodeId v : sg.attached_inside) attached |= AlphaMask{1} << index.at(v);
    for (const auto& input : placement.external) {
      auto it = index.find(input.target);
      if (it != index.end()) attached |= AlphaMask{1} << it->second;
    }

    std::vector<NodeId> pool = sg.nodes;
    if (tie_break == TieBreak::LargestId)
      std::reverse(pool.begin(), pool.end());

    std::vector<NodeId> chosen;
    bool satisfied = false;
    for (std::size_t k = 0; k <= pool.size() && !satisfied; ++k) {
      satisfied = first_combination(
          pool.size(), k, [&](const std::vector<std::size_t>& combo) {
            AlphaMask w = attached;
            for (std::size_t i : combo)
              w |= AlphaMask{1} << index.at(pool[i]);
            if (w == 0) return false;
            pattern.targets = w;
            if (!detail::flat_is_ssc(pattern)) return false;
            chosen.clear();
            for (std::size_t i : combo) chosen.push_back(pool[i]);
            return true;
          });
    }
    if (!satisfied)
      throw StageUnsatisfiable("no placement of any size satisfies component " +
                               std::to_string(comp));

    std::sort(chosen.begin(), chosen.end());
    for (NodeId target : chosen)
      placement.external.push_back(
          {"u" + std::to_string(placement.external.size() + 1), target});

    cumulative |= net.mask_of(sg.nodes);
    StageRecord record;
    record.component_index = comp;
    record.type = classify(sg);
    record.externals_added = chosen;
    record.ssc_nodes_after = net.labels_of(cumulative);
    placement.per_stage.push_back(std::move(record));
    visited[static_cast<std::size_t>(comp)] = true;
  }

  // Stage-local choices can leave a subset spanning several components
  // uncovered; patch greedily by targeting the smallest node of the first
  // failing subset until the whole network passes.
  if (net.state_count() <= kDefaultExactLimit) {
    while (true) {
      StructuredNetwork placed = build_network(
          net.state_labels(), net.state_edges(), placement.external);
      SscReport report = is_ssc_exact(placed);
      if (report.is_ssc) break;
      NodeId target = report.witness.front();
      placement.external.push_back(
          {"u" + std::to_string(placement.external.size() + 1), target});
      placement.post_additions.push_back(target);
    }
  }
  return placement;
}

SscReport verify_placement(const StructuredNetwork& net,
                           const InputPlacement& placement) {
  require_state_only(net, "verify_placement");
  StructuredNetwork placed = build_network(net.state_labels(),
                                           net.state_edges(),
                                           placement.external);
  try {
    return is_ssc_exact(placed);
  } catch (const NotAccessible&) {
    return {false, {}, 0};
  }
}

bool minimality_audit(const StructuredNetwork& net,
                      const InputPlacement& placement,
                      std::size_t budget) {
  require_state_only(net, "minimality_audit");
  budget = std::min<std::size_t>(budget, 63);
  if (net.state_count() > budget)
    throw TooLarge("minimality audit supports at most " +
                   std::to_string(budget) + " nodes");

  const std::size_t n = net.state_count();
  for (std::size_t k = 1; k < placement.external.size(); ++k) {
    if (k > n) break;
    AlphaMask mask = (AlphaMask{1} << k) - 1;
    const AlphaMask end = AlphaMask{1} << n;
    while (mask < end) {
      std::vector<InputAttachment> inputs;
      std::vector<NodeId> targets = net.labels_of(mask);
      for (std::size_t i = 0; i < targets.size(); ++i)
        inputs.push_back({"u" + std::to_string(i + 1), targets[i]});
      StructuredNetwork candidate =
          build_network(net.state_labels(), net.state_edges(), inputs);
      try {
        if (is_ssc_exact(candidate).is_ssc) return false;
      } catch (const NotAccessible&) {
      }
      AlphaMask low = mask & (~mask + 1);
      AlphaMask ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return true;
}

}  // namespace ssc
