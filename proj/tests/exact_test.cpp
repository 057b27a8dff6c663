#include "ssc/exact.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "ssc/graph.hpp"
#include "support/fixtures.hpp"

namespace {

using ssc::build_network;
using ssc::InputAttachment;
using ssc::is_ssc_exact;
using ssc::NodeId;
using ssc::SscReport;
using ssc::StructuredNetwork;

StructuredNetwork terminal_input_path(int n) {
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back(static_cast<NodeId>(i));
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  return build_network(nodes, edges, {{"u1", 1}});
}

TEST(ExactCheck, TreeWithInputsAtThreeAndFiveIsSsc) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig1a.json"));
  EXPECT_TRUE(r.is_ssc);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(r.subsets_examined, 31u);
}

TEST(ExactCheck, TreeWithInputsAtFourAndFiveFailsOnOneThree) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig1b.json"));
  EXPECT_FALSE(r.is_ssc);
  EXPECT_EQ(r.witness, (std::vector<NodeId>{1, 3}));
  EXPECT_EQ(r.subsets_examined, 7u);
}

TEST(ExactCheck, CycleWithAdjacentInputsIsSsc) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig2a.json"));
  EXPECT_TRUE(r.is_ssc);
  EXPECT_EQ(r.subsets_examined, 15u);
}

TEST(ExactCheck, CycleWithOppositeInputsFailsOnTwoFour) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig2b.json"));
  EXPECT_FALSE(r.is_ssc);
  EXPECT_EQ(r.witness, (std::vector<NodeId>{2, 4}));
  EXPECT_EQ(r.subsets_examined, 9u);
}

TEST(ExactCheck, SixteenNodeSevenInputNetworkIsSsc) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig3.json"));
  EXPECT_TRUE(r.is_ssc);
  EXPECT_EQ(r.subsets_examined, 65535u);
}

TEST(ExactCheck, PlacedSixteenNodeNetworkIsSsc) {
  SscReport r = is_ssc_exact(testsupport::load_network("fig5_placed.json"));
  EXPECT_TRUE(r.is_ssc);
  EXPECT_EQ(r.subsets_examined, 65535u);
}

TEST(ExactCheck, SingleNodeWithInputExaminesOneSubset) {
  StructuredNetwork net = build_network({7}, {}, {{"u1", 7}});
  SscReport r = is_ssc_exact(net);
  EXPECT_TRUE(r.is_ssc);
  EXPECT_EQ(r.subsets_examined, 1u);
}

TEST(ExactCheck, ExaminedCountsStopAtTheWitness) {
  // The witness rank is the 1-based position in (cardinality, mask) order.
  StructuredNetwork net = testsupport::load_network("fig1b.json");
  SscReport r = is_ssc_exact(net);
  EXPECT_FALSE(has_dedicated(net, net.mask_of(r.witness)));
}

TEST(ExactCheck, ThrowsWithoutAnyInput) {
  EXPECT_THROW(is_ssc_exact(testsupport::load_network("single_node.json")),
               ssc::NotAccessible);
  EXPECT_THROW(is_ssc_exact(testsupport::load_network("fig5.json")),
               ssc::NotAccessible);
}

TEST(ExactCheck, ThrowsPastTheSizeLimit) {
  EXPECT_THROW(is_ssc_exact(terminal_input_path(25)), ssc::TooLarge);
  // A raised limit admits the same network. A star fails at its first pair
  // of leaves, so the 25-node sweep stops almost immediately.
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i <= 25; ++i) nodes.push_back(i);
  for (NodeId i = 2; i <= 25; ++i) edges.emplace_back(NodeId{1}, i);
  StructuredNetwork star = build_network(nodes, edges, {{"u1", 1}});
  SscReport r;
  EXPECT_NO_THROW(r = is_ssc_exact(star, 25));
  EXPECT_FALSE(r.is_ssc);
  EXPECT_EQ(r.witness, (std::vector<NodeId>{2, 3}));
}

TEST(ExactCheck, LimitCapsAtSixtyThreeWithoutOverflow) {
  StructuredNetwork net = terminal_input_path(10);
  SscReport r = is_ssc_exact(net, 63);
  EXPECT_TRUE(r.is_ssc);
  EXPECT_EQ(r.subsets_examined, (1u << 10) - 1);
}

TEST(SscNodes, ComplementOfFailingUnions) {
  StructuredNetwork net = testsupport::load_network("fig1b.json");
  EXPECT_EQ(ssc_nodes(net), (std::vector<NodeId>{2, 4, 5}));
}

TEST(SscNodes, OppositeCycleInputsLeaveTargetsOnly) {
  StructuredNetwork net = testsupport::load_network("fig2b.json");
  EXPECT_EQ(ssc_nodes(net), (std::vector<NodeId>{1, 3}));
}

TEST(SscNodes, EqualsStateSetWhenSsc) {
  StructuredNetwork net = testsupport::load_network("fig1a.json");
  EXPECT_EQ(ssc_nodes(net), net.state_labels());
  StructuredNetwork stage = testsupport::load_network("fig4a_stage.json");
  EXPECT_EQ(ssc_nodes(stage), stage.state_labels());
}

class ThreadEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("SSC_THREADS"); }
};

TEST_F(ThreadEnv, VerdictIsIdenticalAcrossThreadCounts) {
  // n = 22 crosses the parallel threshold; the witness-free sweep must
  // examine all 2^22 - 1 subsets no matter how the chunks are split.
  StructuredNetwork net = terminal_input_path(22);
  setenv("SSC_THREADS", "1", 1);
  SscReport serial = is_ssc_exact(net);
  setenv("SSC_THREADS", "3", 1);
  SscReport threaded = is_ssc_exact(net);
  EXPECT_TRUE(serial.is_ssc);
  EXPECT_TRUE(threaded.is_ssc);
  EXPECT_EQ(serial.subsets_examined, (1u << 22) - 1);
  EXPECT_EQ(threaded.subsets_examined, serial.subsets_examined);
}

TEST_F(ThreadEnv, WitnessIsIdenticalAcrossThreadCounts) {
  // Same shape with the input moved inward: fails, and every thread split
  // must report the first failure in enumeration order.
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i <= 22; ++i) nodes.push_back(i);
  for (NodeId i = 1; i < 22; ++i) edges.emplace_back(i, i + 1);
  StructuredNetwork net = build_network(nodes, edges, {{"u1", 11}});
  setenv("SSC_THREADS", "1", 1);
  SscReport serial = is_ssc_exact(net);
  setenv("SSC_THREADS", "4", 1);
  SscReport threaded = is_ssc_exact(net);
  EXPECT_FALSE(serial.is_ssc);
  EXPECT_EQ(serial.witness, threaded.witness);
  EXPECT_EQ(serial.subsets_examined, threaded.subsets_examined);
}

}  // namespace
