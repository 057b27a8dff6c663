// Independent reference implementations for cross-checking the library.
// Deliberately separate: set-based adjacency, direct enumeration, direct
// controllability-matrix rank.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace testsupport {

struct NaiveNet {
  std::vector<std::uint32_t> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> targets;  // one input per listed node
};

struct NaiveResult {
  bool is_ssc = false;
  std::vector<std::uint32_t> witness;  // empty when is_ssc
  unsigned long long examined = 0;
};

// Subsets in (cardinality, ascending bitmask) order; first failure wins.
NaiveResult naive_is_ssc(const NaiveNet& net);

// Complement of the union of all failing subsets.
std::vector<std::uint32_t> naive_ssc_nodes(const NaiveNet& net);

// Rank of [B, AB, ..., A^(n-1)B] via column-pivoted QR.
int ctrb_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace testsupport
