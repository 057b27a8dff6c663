#include "ssc/graph.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "support/fixtures.hpp"

namespace {

using ssc::AlphaMask;
using ssc::build_network;
using ssc::InputAttachment;
using ssc::NodeId;
using ssc::NodeRole;
using ssc::StructuredNetwork;

using Edge = std::pair<NodeId, NodeId>;

StructuredNetwork fig1a() { return testsupport::load_network("fig1a.json"); }

TEST(BuildNetwork, CanonicalizesLabelsAndEdges) {
  StructuredNetwork net = build_network({5, 1, 3, 1}, {{3, 1}, {1, 3}, {5, 3}}, {});
  EXPECT_EQ(net.state_labels(), (std::vector<NodeId>{1, 3, 5}));
  EXPECT_EQ(net.state_edges(), (std::vector<Edge>{{1, 3}, {3, 5}}));
  EXPECT_EQ(net.state_count(), 3u);
}

TEST(BuildNetwork, RejectsEmptyStateSet) {
  EXPECT_THROW(build_network({}, {}, {}), ssc::EmptyStateSet);
}

TEST(BuildNetwork, RejectsDanglingEdgeEndpoint) {
  EXPECT_THROW(build_network({1, 2}, {{1, 9}}, {}), ssc::DanglingEdge);
}

TEST(BuildNetwork, RejectsSelfPairEdge) {
  EXPECT_THROW(build_network({1, 2}, {{1, 1}}, {}), ssc::DanglingEdge);
}

TEST(BuildNetwork, RejectsDanglingInputTarget) {
  EXPECT_THROW(build_network({1, 2}, {{1, 2}}, {{"u1", 7}}), ssc::DanglingEdge);
}

TEST(BuildNetwork, RejectsDuplicateInputId) {
  EXPECT_THROW(build_network({1, 2}, {{1, 2}}, {{"u1", 1}, {"u1", 2}}),
               ssc::DuplicateInputAttachment);
}

TEST(BuildNetwork, RejectsMoreThan64Nodes) {
  std::vector<NodeId> nodes(65);
  for (NodeId i = 0; i < 65; ++i) nodes[i] = i + 1;
  EXPECT_THROW(build_network(nodes, {}, {}), ssc::TooLarge);
}

TEST(BuildNetwork, AcceptsExactly64Nodes) {
  std::vector<NodeId> nodes(64);
  for (NodeId i = 0; i < 64; ++i) nodes[i] = i + 1;
  StructuredNetwork net = build_network(nodes, {}, {});
  EXPECT_EQ(net.full_mask(), ~AlphaMask{0});
}

TEST(StructuredNetwork, LabelIndexRoundTrip) {
  StructuredNetwork net = build_network({10, 20, 30}, {{10, 20}}, {});
  EXPECT_EQ(net.index_of(20), 1u);
  EXPECT_EQ(net.label_of(1), 20u);
  EXPECT_TRUE(net.has_state(30));
  EXPECT_FALSE(net.has_state(40));
  EXPECT_THROW(net.index_of(40), std::out_of_range);
}

TEST(StructuredNetwork, MaskRoundTrip) {
  StructuredNetwork net = fig1a();
  AlphaMask mask = net.mask_of({1, 3, 5});
  EXPECT_EQ(mask, AlphaMask{0b10101});
  EXPECT_EQ(net.labels_of(mask), (std::vector<NodeId>{1, 3, 5}));
  EXPECT_EQ(net.full_mask(), AlphaMask{0b11111});
}

TEST(StructuredNetwork, AdjacencyBitsets) {
  StructuredNetwork net = fig1a();
  // Node 2 neighbors 1, 3, 4; node 5 only 4.
  EXPECT_EQ(net.adjacency(net.index_of(2)), net.mask_of({1, 3, 4}));
  EXPECT_EQ(net.adjacency(net.index_of(5)), net.mask_of({4}));
}

TEST(StructuredNetwork, InputTargetMask) {
  StructuredNetwork net = fig1a();
  EXPECT_EQ(net.input_target_mask(), net.mask_of({3, 5}));
}

TEST(NeighborsOfSet, StateAndInputMembers) {
  StructuredNetwork net = fig1a();
  ssc::NeighborSet around = neighbors_of_set(net, net.mask_of({1, 3}));
  EXPECT_EQ(around.state, net.mask_of({2}));
  // u1 targets 3 which lies inside alpha, u2 targets 5 which does not.
  EXPECT_EQ(around.inputs, (std::vector<std::size_t>{0}));
}

TEST(NeighborsOfSet, ExcludesAlphaItself) {
  StructuredNetwork net = fig1a();
  ssc::NeighborSet around = neighbors_of_set(net, net.mask_of({2, 4}));
  EXPECT_EQ(around.state, net.mask_of({1, 3, 5}));
  EXPECT_TRUE(around.inputs.empty());
}

TEST(IsAccessible, TrueWhenInputsReachEveryNode) {
  EXPECT_TRUE(is_accessible(fig1a()));
}

TEST(IsAccessible, FalseWithoutInputs) {
  StructuredNetwork net = build_network({1, 2}, {{1, 2}}, {});
  EXPECT_FALSE(is_accessible(net));
}

TEST(IsAccessible, FalseWhenAComponentHasNoInput) {
  StructuredNetwork net = build_network({1, 2, 3, 4}, {{1, 2}, {3, 4}}, {{"u1", 1}});
  EXPECT_FALSE(is_accessible(net));
}

TEST(ClassifyNode, DedicatedSharingNotNeighbor) {
  StructuredNetwork net = fig1a();
  AlphaMask alpha = net.mask_of({1, 3});
  // Node 2 reaches both members, node 4 reaches none.
  EXPECT_EQ(classify_node(net, 2, alpha), NodeRole::Sharing);
  EXPECT_EQ(classify_node(net, 4, alpha), NodeRole::NotNeighbor);
  EXPECT_EQ(classify_node(net, 4, net.mask_of({5})), NodeRole::Dedicated);
}

TEST(ClassifyNode, MemberOfAlphaIsAnError) {
  StructuredNetwork net = fig1a();
  EXPECT_THROW(classify_node(net, 1, net.mask_of({1, 3})), ssc::NodeInAlpha);
}

TEST(ClassifyInput, DedicatedWhenTargetInsideAlpha) {
  StructuredNetwork net = fig1a();
  AlphaMask alpha = net.mask_of({1, 3});
  EXPECT_EQ(classify_input(net, 0, alpha), NodeRole::Dedicated);
  EXPECT_EQ(classify_input(net, 1, alpha), NodeRole::NotNeighbor);
}

TEST(HasDedicated, FindsDedicatedStateNode) {
  StructuredNetwork net = fig1a();
  EXPECT_TRUE(has_dedicated(net, net.mask_of({5})));   // node 4 qualifies
  EXPECT_TRUE(has_dedicated(net, net.mask_of({1, 3})));  // u1 qualifies
}

TEST(HasDedicated, FalseWhenEveryNeighborShares) {
  // Same shape as fig1a but inputs at 4 and 5: alpha {1,3} sees only node 2,
  // which reaches it twice.
  StructuredNetwork net = testsupport::load_network("fig1b.json");
  EXPECT_FALSE(has_dedicated(net, net.mask_of({1, 3})));
}

}  // namespace
