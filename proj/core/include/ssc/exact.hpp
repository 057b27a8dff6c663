// Exact SSC decision by exhaustive subset enumeration.
#pragma once

#include <cstdint>
#include <vector>

#include "ssc/graph.hpp"

namespace ssc {

inline constexpr std::size_t kDefaultExactLimit = 24;

struct SscReport {
  bool is_ssc = false;
  std::vector<NodeId> witness;       // empty iff is_ssc; sorted ascending
  std::uint64_t subsets_examined = 0;
};

// Decides SSC by checking every non-empty alpha for a dedicated node.
// Enumeration order is increasing cardinality, then ascending bitset value;
// the witness is the first failing alpha in that order and subsets_examined
// is its 1-based position (2^n - 1 when the verdict is SSC). The scan may run
// on several threads (capped by SSC_THREADS) but the result is deterministic.
// Throws TooLarge when n exceeds `limit`, NotAccessible when some state node
// is unreachable from every input.
SscReport is_ssc_exact(const StructuredNetwork& net,
                       std::size_t limit = kDefaultExactLimit);

// State nodes k such that every alpha containing k has a dedicated node.
// Equals all of V^S exactly when the network is SSC. Same preconditions as
// is_ssc_exact.
std::vector<NodeId> ssc_nodes(const StructuredNetwork& net,
                              std::size_t limit = kDefaultExactLimit);

}  // namespace ssc
