// Shared subset-enumeration core for the exact checker and the composer.
// Not installed; internal to the library.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssc/graph.hpp"

namespace ssc::detail {

// Adjacency pattern plus input-target mask, detached from node labels.
struct FlatPattern {
  std::vector<AlphaMask> adjacency;
  AlphaMask targets = 0;

  std::size_t n() const { return adjacency.size(); }
  AlphaMask full() const {
    return n() == 64 ? ~AlphaMask{0} : (AlphaMask{1} << n()) - 1;
  }
};

FlatPattern flatten(const StructuredNetwork& net);

bool flat_has_dedicated(const FlatPattern& p, AlphaMask alpha);

struct FirstFailure {
  AlphaMask mask = 0;
  std::uint64_t rank = 0;  // 1-based position in (cardinality, value) order
};

// First alpha without a dedicated node, in (cardinality, ascending value)
// order; nullopt when every subset passes. Deterministic under parallelism.
std::optional<FirstFailure> scan_first_failure(const FlatPattern& p);

// Union of all failing alphas (full sweep, no early exit).
AlphaMask scan_bad_union(const FlatPattern& p);

// Convenience verdict for small ad-hoc graphs (stage graphs, audits).
bool flat_is_ssc(const FlatPattern& p);

// Thread budget: min(hardware, SSC_THREADS when set), at least 1.
std::size_t resolve_thread_count();

}  // namespace ssc::detail
