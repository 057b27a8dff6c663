#include "ssc/pactus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "ssc/exact.hpp"

namespace ssc {
namespace {

using Edge = std::pair<NodeId, NodeId>;

Edge canonical(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }

std::map<NodeId, std::vector<NodeId>> adjacency_lists(const StructuredNetwork& net) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (NodeId v : net.state_labels()) adj[v];
  for (auto [a, b] : net.state_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool state_graph_connected(const StructuredNetwork& net) {
  AlphaMask seen = 1;
  for (;;) {
    AlphaMask next = seen;
    AlphaMask frontier = seen;
    while (frontier) {
      int k = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= net.adjacency(static_cast<std::size_t>(k));
    }
    if (next == seen) break;
    seen = next;
  }
  return seen == net.full_mask();
}

// Orders component nodes along the path (from the smaller terminal) or around
// the cycle (from the smallest label toward its smaller neighbor).
std::vector<NodeId> trail_order(const std::vector<NodeId>& nodes,
                                const std::map<NodeId, std::vector<NodeId>>& adj,
                                ComponentKind kind) {
  if (nodes.size() == 1) return nodes;
  std::set<NodeId> members(nodes.begin(), nodes.end());
  auto inside = [&](NodeId v) {
    std::vector<NodeId> list;
    for (NodeId u : adj.at(v))
      if (members.count(u)) list.push_back(u);
    return list;
  };

  NodeId start;
  if (kind == ComponentKind::Path) {
    std::vector<NodeId> terminals;
    for (NodeId v : nodes)
      if (inside(v).size() <= 1) terminals.push_back(v);
    start = *std::min_element(terminals.begin(), terminals.end());
  } else {
    start = *std::min_element(nodes.begin(), nodes.end());
  }

  std::vector<NodeId> order{start};
  std::set<NodeId> used{start};
  NodeId current = start;
  while (order.size() < nodes.size()) {
    std::vector<NodeId> candidates;
    for (NodeId u : inside(current))
      if (!used.count(u)) candidates.push_back(u);
    NodeId next = *std::min_element(candidates.begin(), candidates.end());
    order.push_back(next);
    used.insert(next);
    current = next;
  }
  return order;
}

// Validates one seed component against its induced subgraph and fills in the
// ordered node list and edge list.
Component make_component(int index, const std::vector<NodeId>& nodes,
                         ComponentKind kind, const StructuredNetwork& net,
                         const std::map<NodeId, std::vector<NodeId>>& adj) {
  std::set<NodeId> members(nodes.begin(), nodes.end());
  Component comp;
  comp.index = index;
  comp.kind = kind;

  std::map<NodeId, int> degree;
  for (NodeId v : nodes) degree[v] = 0;
  for (auto [a, b] : net.state_edges())
    if (members.count(a) && members.count(b)) {
      comp.edges.emplace_back(a, b);
      ++degree[a];
      ++degree[b];
    }

  // Connectivity within the component.
  std::set<NodeId> seen{nodes.front()};
  std::vector<NodeId> stack{nodes.front()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : adj.at(v))
      if (members.count(u) && seen.insert(u).second) stack.push_back(u);
  }
  bool connected = seen.size() == members.size();

  bool shape_ok;
  if (kind == ComponentKind::Path) {
    shape_ok = connected && comp.edges.size() == nodes.size() - 1;
    for (auto [v, d] : degree) shape_ok = shape_ok && d <= 2;
  } else {
    shape_ok = connected && nodes.size() >= 3 && comp.edges.size() == nodes.size();
    for (auto [v, d] : degree) shape_ok = shape_ok && d == 2;
  }
  if (!shape_ok)
    throw NotAPactus("component " + std::to_string(index) + " is not a valid " +
                     (kind == ComponentKind::Path ? "path" : "cycle"));

  comp.nodes = trail_order(nodes, adj, kind);
  return comp;
}

PactusDecomposition assemble(const StructuredNetwork& net,
                             const std::vector<SeedComponent>& seeds,
                             std::map<NodeId, int>& owner_out) {
  PactusDecomposition dec;
  auto adj = adjacency_lists(net);

  std::map<NodeId, int> owner;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i].nodes.empty()) throw NotAPactus("empty seed component");
    for (NodeId v : seeds[i].nodes) {
      if (!net.has_state(v))
        throw NotAPactus("seed references unknown node " + std::to_string(v));
      if (!owner.emplace(v, static_cast<int>(i)).second)
        throw NotAPactus("node " + std::to_string(v) + " appears in two components");
      ++covered;
    }
  }
  if (covered != net.state_count())
    throw NotAPactus("seed components do not cover the state set");

  for (std::size_t i = 0; i < seeds.size(); ++i)
    dec.components.push_back(
        make_component(static_cast<int>(i), seeds[i].nodes, seeds[i].kind, net, adj));

  for (auto [a, b] : net.state_edges()) {
    int ca = owner.at(a), cb = owner.at(b);
    if (ca == cb) continue;
    NodeId from = ca < cb ? a : b;
    NodeId to = ca < cb ? b : a;
    auto key = std::make_pair(std::min(ca, cb), std::max(ca, cb));
    auto& bridge = dec.bridges[key];
    bridge.from_index = key.first;
    bridge.to_index = key.second;
    bridge.edges.emplace_back(from, to);
  }

  for (auto& [key, bridge] : dec.bridges) {
    std::sort(bridge.edges.begin(), bridge.edges.end());
    std::set<NodeId> endpoints;
    for (auto [a, b] : bridge.edges) {
      if (!endpoints.insert(a).second || !endpoints.insert(b).second)
        throw NotAPactus("bridge between components " + std::to_string(key.first) +
                         " and " + std::to_string(key.second) +
                         " is not one-to-one");
    }
    std::size_t cap = std::min(dec.components[key.first].nodes.size(),
                               dec.components[key.second].nodes.size());
    if (bridge.edges.empty() || bridge.edges.size() > cap)
      throw NotAPactus("bridge size violates the boundary condition");
  }

  dec.neighbors.assign(dec.components.size(), {});
  for (const auto& [key, bridge] : dec.bridges) {
    dec.neighbors[key.first].push_back(key.second);
    dec.neighbors[key.second].push_back(key.first);
  }
  for (auto& list : dec.neighbors) std::sort(list.begin(), list.end());

  owner_out = std::move(owner);
  return dec;
}

// Biconnected blocks (as node sets) of the state graph, Hopcroft-Tarjan.
std::vector<std::set<NodeId>> biconnected_blocks(const StructuredNetwork& net) {
  auto adj = adjacency_lists(net);
  std::map<NodeId, int> depth, low;
  std::vector<Edge> edge_stack;
  std::vector<std::set<NodeId>> blocks;

  struct Frame {
    NodeId v;
    NodeId parent;
    std::size_t next_child = 0;
  };

  for (NodeId root : net.state_labels()) {
    if (depth.count(root)) continue;
    std::vector<Frame> stack{{root, root}};
    depth[root] = low[root] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = adj.at(f.v);
      if (f.next_child < nbrs.size()) {
        NodeId u = nbrs[f.next_child++];
        if (u == f.parent && f.v != root) continue;
        if (!depth.count(u)) {
          edge_stack.push_back({f.v, u});
          depth[u] = low[u] = depth[f.v] + 1;
          stack.push_back({u, f.v});
        } else if (depth[u] < depth[f.v]) {
          edge_stack.push_back({f.v, u});
          low[f.v] = std::min(low[f.v], depth[u]);
        }
      } else {
        NodeId v = f.v;
        NodeId parent = f.parent;
        stack.pop_back();
        if (stack.empty()) continue;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= depth[parent]) {
          // Everything pushed after the tree edge (parent, v) belongs to the
          // block rooted at that edge; pop until and including it.
          std::set<NodeId> block;
          Edge e;
          do {
            e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
          } while (!(e.first == parent && e.second == v));
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

std::vector<SeedComponent> heuristic_seeds(const StructuredNetwork& net) {
  auto adj = adjacency_lists(net);
  std::set<NodeId> in_cycle;
  std::vector<SeedComponent> seeds;

  for (auto& block : biconnected_blocks(net)) {
    if (block.size() < 3) continue;
    std::size_t block_edges = 0;
    bool simple_cycle = true;
    for (NodeId v : block) {
      std::size_t inside = 0;
      for (NodeId u : adj.at(v))
        if (block.count(u)) ++inside;
      simple_cycle = simple_cycle && inside == 2;
      block_edges += inside;
    }
    simple_cycle = simple_cycle && block_edges / 2 == block.size();
    if (!simple_cycle)
      throw NotAPactus(
          "a biconnected block is neither a cycle nor a cut edge; "
          "no decomposition found, supply seeds");
    seeds.push_back({std::vector<NodeId>(block.begin(), block.end()),
                     ComponentKind::Cycle});
    in_cycle.insert(block.begin(), block.end());
  }

  // Remaining nodes hang on cut edges; peel deterministic maximal paths.
  std::set<NodeId> free;
  for (NodeId v : net.state_labels())
    if (!in_cycle.count(v)) free.insert(v);

  while (!free.empty()) {
    auto free_degree = [&](NodeId v) {
      std::size_t d = 0;
      for (NodeId u : adj.at(v))
        if (free.count(u)) ++d;
      return d;
    };
    NodeId start = 0;
    bool found = false;
    for (NodeId v : free)
      if (free_degree(v) <= 1) {
        start = v;
        found = true;
        break;
      }
    if (!found)
      throw NotAPactus("leftover nodes form a cycle after block extraction");

    std::vector<NodeId> path{start};
    free.erase(start);
    NodeId current = start;
    for (;;) {
      std::vector<NodeId> next;
      for (NodeId u : adj.at(current))
        if (free.count(u)) next.push_back(u);
      if (next.size() != 1) break;
      current = next.front();
      path.push_back(current);
      free.erase(current);
    }
    seeds.push_back({std::move(path), ComponentKind::Path});
  }
  return seeds;
}

// Degree-checked shapes for the structural checks.
void require_path(const StructuredNetwork& net) {
  bool ok = state_graph_connected(net) &&
            net.state_edges().size() == net.state_count() - 1;
  for (std::size_t i = 0; ok && i < net.state_count(); ++i)
    ok = std::popcount(net.adjacency(i)) <= 2;
  if (!ok) throw NotAPath("state graph is not a path");
}

void require_tree(const StructuredNetwork& net) {
  if (!state_graph_connected(net) ||
      net.state_edges().size() != net.state_count() - 1)
    throw NotATree("state graph is not a tree");
}

void require_cycle(const StructuredNetwork& net) {
  bool ok = net.state_count() >= 3 && state_graph_connected(net) &&
            net.state_edges().size() == net.state_count();
  for (std::size_t i = 0; ok && i < net.state_count(); ++i)
    ok = std::popcount(net.adjacency(i)) == 2;
  if (!ok) throw NotACycle("state graph is not a single cycle");
}

}  // namespace

int PactusDecomposition::component_of(NodeId label) const {
  auto it = owner_.find(label);
  return it == owner_.end() ? -1 : it->second;
}

PactusDecomposition decompose(const StructuredNetwork& net,
                              const std::vector<SeedComponent>& seeds) {
  if (!state_graph_connected(net)) throw DisconnectedState();
  std::map<NodeId, int> owner;
  PactusDecomposition dec =
      assemble(net, seeds.empty() ? heuristic_seeds(net) : seeds, owner);
  dec.owner_ = std::move(owner);
  return dec;
}

bool check_path_ssc(const StructuredNetwork& comp_net) {
  require_path(comp_net);
  for (const auto& att : comp_net.inputs())
    if (std::popcount(comp_net.adjacency(comp_net.index_of(att.target))) <= 1)
      return true;
  return false;
}

bool check_tree_ssc(const StructuredNetwork& net) {
  require_tree(net);
  if (net.inputs().size() < 2)
    throw TooFewInputs("tree split check needs at least two inputs");

  AlphaMask attached = net.input_target_mask();
  std::vector<std::size_t> w_nodes;
  for (AlphaMask rest = attached; rest;) {
    w_nodes.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  const AlphaMask full = net.full_mask();

  // Assign to each attached node a path that starts there (the attached node
  // stays a terminal), avoids other attached nodes, and uses only unassigned
  // nodes; succeed when the paths partition the tree. Growing from the far
  // end only keeps every candidate a simple path (the graph is a tree) and
  // enumerates each one exactly once.
  auto search = [&](auto&& self, std::size_t next_w, AlphaMask used) -> bool {
    if (next_w == w_nodes.size()) return used == full;
    std::size_t w = w_nodes[next_w];
    AlphaMask allowed = ~used & ~(attached & ~(AlphaMask{1} << w));

    std::vector<std::pair<AlphaMask, std::size_t>> stack{{AlphaMask{1} << w, w}};
    while (!stack.empty()) {
      auto [path, end] = stack.back();
      stack.pop_back();
      if (self(self, next_w + 1, used | path)) return true;
      AlphaMask fresh = net.adjacency(end) & allowed & ~path;
      while (fresh) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        stack.push_back({path | (AlphaMask{1} << u), u});
      }
    }
    return false;
  };
  return search(search, 0, 0);
}

bool check_cycle_ssc(const StructuredNetwork& net) {
  require_cycle(net);
  if (net.inputs().size() != 2)
    throw WrongInputCount("cycle adjacency check is stated for exactly two inputs");
  NodeId t1 = net.inputs()[0].target;
  NodeId t2 = net.inputs()[1].target;
  if (t1 == t2) return false;
  return (net.adjacency(net.index_of(t1)) &
          (AlphaMask{1} << net.index_of(t2))) != 0;
}

bool check_pactus_ssc(const PactusDecomposition& dec,
                      const std::vector<InputAttachment>& attachments) {
  for (const auto& [key, bridge] : dec.bridges)
    if (bridge.edges.size() > 1)
      throw MultiBridge("bridge between components " + std::to_string(key.first) +
                        " and " + std::to_string(key.second) +
                        " has more than one edge");

  for (const auto& comp : dec.components) {
    std::vector<InputAttachment> own;
    for (const auto& att : attachments)
      if (dec.component_of(att.target) == comp.index) own.push_back(att);

    StructuredNetwork sub = build_network(comp.nodes, comp.edges, own);
    if (comp.kind == ComponentKind::Path) {
      if (!check_path_ssc(sub)) return false;
    } else {
      if (own.size() != 2 || !check_cycle_ssc(sub)) return false;
    }
  }
  return true;
}

bool merge_preserves_ssc(const StructuredNetwork& net_i,
                         const StructuredNetwork& net_j,
                         std::pair<NodeId, NodeId> bridge) {
  for (NodeId v : net_j.state_labels())
    if (net_i.has_state(v))
      throw std::invalid_argument("networks share state node " + std::to_string(v));

  if (!is_ssc_exact(net_i).is_ssc || !is_ssc_exact(net_j).is_ssc)
    throw ComponentNotSsc("both networks must be SSC before merging");

  auto [a, b] = bridge;
  if (net_i.has_state(b) && net_j.has_state(a)) std::swap(a, b);
  if (!net_i.has_state(a) || !net_j.has_state(b))
    throw std::invalid_argument("bridge must join the two networks");

  std::vector<NodeId> nodes = net_i.state_labels();
  nodes.insert(nodes.end(), net_j.state_labels().begin(), net_j.state_labels().end());
  std::vector<Edge> edges = net_i.state_edges();
  edges.insert(edges.end(), net_j.state_edges().begin(), net_j.state_edges().end());
  edges.push_back(canonical(a, b));
  std::vector<InputAttachment> inputs = net_i.inputs();
  inputs.insert(inputs.end(), net_j.inputs().begin(), net_j.inputs().end());

  return is_ssc_exact(build_network(nodes, edges, inputs)).is_ssc;
}

}  // namespace ssc
