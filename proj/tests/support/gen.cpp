#include "support/gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace testsupport {
namespace {

std::vector<ssc::NodeId> shuffled_labels(std::mt19937& rng, int n) {
  std::vector<ssc::NodeId> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1u);
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Shape make_path(std::mt19937& rng, int n) {
  Shape shape;
  shape.nodes = shuffled_labels(rng, n);
  for (int i = 0; i + 1 < n; ++i)
    shape.edges.emplace_back(shape.nodes[i], shape.nodes[i + 1]);
  return shape;
}

Shape make_cycle(std::mt19937& rng, int n) {
  Shape shape = make_path(rng, n);
  shape.edges.emplace_back(shape.nodes.front(), shape.nodes.back());
  return shape;
}

Shape make_tree(std::mt19937& rng, int n) {
  Shape shape;
  shape.nodes = shuffled_labels(rng, n);
  for (int i = 1; i < n; ++i)
    shape.edges.emplace_back(shape.nodes[pick(rng, 0, i - 1)],
                             shape.nodes[i]);
  return shape;
}

std::vector<ssc::NodeId> pick_targets(std::mt19937& rng, const Shape& shape,
                                      int m) {
  std::vector<ssc::NodeId> pool = shape.nodes;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(
      std::min<std::size_t>(pool.size(), static_cast<std::size_t>(m))));
  return pool;
}

ssc::StructuredNetwork make_network(const Shape& shape,
                                    const std::vector<ssc::NodeId>& targets) {
  std::vector<ssc::InputAttachment> inputs;
  for (std::size_t i = 0; i < targets.size(); ++i)
    inputs.push_back({"u" + std::to_string(i + 1), targets[i]});
  return ssc::build_network(shape.nodes, shape.edges, inputs);
}

GeneratedPactus make_chain_pactus(std::mt19937& rng, int max_nodes) {
  GeneratedPactus gen;
  int m = pick(rng, 2, 4);
  ssc::NodeId next = 1;
  for (int c = 0; c < m; ++c) {
    bool cycle = pick(rng, 0, 2) == 0;
    int size = cycle ? pick(rng, 3, 5) : pick(rng, 1, 4);
    int room = max_nodes - static_cast<int>(next) + 1;
    if (size > room) {
      size = room;
      if (size < 3) cycle = false;
    }
    if (size < 1) break;
    ssc::SeedComponent seed;
    for (int i = 0; i < size; ++i) seed.nodes.push_back(next++);
    seed.kind = cycle ? ssc::ComponentKind::Cycle : ssc::ComponentKind::Path;
    for (std::size_t i = 0; i + 1 < seed.nodes.size(); ++i)
      gen.shape.edges.emplace_back(seed.nodes[i], seed.nodes[i + 1]);
    if (cycle)
      gen.shape.edges.emplace_back(seed.nodes.front(), seed.nodes.back());
    gen.shape.nodes.insert(gen.shape.nodes.end(), seed.nodes.begin(),
                           seed.nodes.end());
    gen.seeds.push_back(std::move(seed));
  }
  for (std::size_t c = 1; c < gen.seeds.size(); ++c) {
    std::vector<ssc::NodeId> left = gen.seeds[c - 1].nodes;
    std::vector<ssc::NodeId> right = gen.seeds[c].nodes;
    std::shuffle(left.begin(), left.end(), rng);
    std::shuffle(right.begin(), right.end(), rng);
    std::size_t k = static_cast<std::size_t>(pick(rng, 1, 2));
    k = std::min({k, left.size(), right.size()});
    for (std::size_t t = 0; t < k; ++t)
      gen.shape.edges.emplace_back(left[t], right[t]);
  }
  return gen;
}

}  // namespace testsupport
