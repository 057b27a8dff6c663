#include "ssc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "subset_scan.hpp"

namespace ssc {
namespace detail {
namespace {

// Binomial table up to the 64-node representation cap; C(64,32) fits uint64.
struct BinomialTable {
  std::uint64_t c[65][65] = {};
  constexpr BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};
constexpr BinomialTable kBinom;

std::uint64_t binom(std::size_t n, std::size_t k) {
  return k > n ? 0 : kBinom.c[n][k];
}

AlphaMask next_same_popcount(AlphaMask mask) {
  AlphaMask low = mask & -mask;
  AlphaMask carry = mask + low;
  return (((mask ^ carry) >> 2) / low) | carry;
}

// Ascending-mask-value order within a fixed popcount is colexicographic.
AlphaMask unrank_colex(std::uint64_t rank, std::size_t card) {
  AlphaMask mask = 0;
  for (std::size_t i = card; i >= 1; --i) {
    std::size_t m = i - 1;
    while (binom(m + 1, i) <= rank) ++m;
    mask |= AlphaMask{1} << m;
    rank -= binom(m, i);
  }
  return mask;
}

std::uint64_t rank_colex(AlphaMask mask) {
  std::uint64_t rank = 0;
  std::size_t i = 1;
  while (mask) {
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(mask));
    rank += binom(bit, i++);
    mask &= mask - 1;
  }
  return rank;
}

constexpr std::uint64_t kPollInterval = 4096;

// Smallest failing mask of the given cardinality, scanned in parallel over
// contiguous colex-rank ranges; deterministic because the minimum mask wins.
std::optional<AlphaMask> parallel_min_failure(const FlatPattern& p, std::size_t card,
                                              std::size_t threads) {
  const std::uint64_t total = binom(p.n(), card);
  std::atomic<AlphaMask> best{~AlphaMask{0}};
  std::atomic<bool> found{false};

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    AlphaMask mask = unrank_colex(begin, card);
    for (std::uint64_t r = begin; r < end; ++r) {
      if ((r - begin) % kPollInterval == 0 && found.load(std::memory_order_relaxed) &&
          best.load(std::memory_order_relaxed) < mask)
        return;
      if (!flat_has_dedicated(p, mask)) {
        AlphaMask seen = best.load(std::memory_order_relaxed);
        while (mask < seen &&
               !best.compare_exchange_weak(seen, mask, std::memory_order_relaxed)) {
        }
        found.store(true, std::memory_order_relaxed);
        return;
      }
      mask = next_same_popcount(mask);
    }
  };

  std::vector<std::thread> pool;
  std::uint64_t chunk = (total + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    std::uint64_t begin = t * chunk;
    std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();

  if (!found.load()) return std::nullopt;
  return best.load();
}

}  // namespace

FlatPattern flatten(const StructuredNetwork& net) {
  FlatPattern p;
  p.adjacency.resize(net.state_count());
  for (std::size_t i = 0; i < net.state_count(); ++i) p.adjacency[i] = net.adjacency(i);
  p.targets = net.input_target_mask();
  return p;
}

bool flat_has_dedicated(const FlatPattern& p, AlphaMask alpha) {
  if (p.targets & alpha) return true;  // an input attached inside alpha
  for (std::size_t i = 0; i < p.adjacency.size(); ++i) {
    AlphaMask bit = AlphaMask{1} << i;
    if ((alpha & bit) == 0 && std::popcount(p.adjacency[i] & alpha) == 1) return true;
  }
  return false;
}

std::size_t resolve_thread_count() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SSC_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) threads = std::min(threads, static_cast<std::size_t>(parsed));
  }
  return std::min<std::size_t>(threads, 64);
}

std::optional<FirstFailure> scan_first_failure(const FlatPattern& p) {
  const std::size_t n = p.n();
  const std::size_t threads = resolve_thread_count();
  std::uint64_t examined_before = 0;

  for (std::size_t card = 1; card <= n; ++card) {
    const std::uint64_t total = binom(n, card);
    std::optional<AlphaMask> failure;

    if (threads > 1 && n > 20 && total >= 4 * kPollInterval) {
      failure = parallel_min_failure(p, card, threads);
    } else {
      AlphaMask mask = (AlphaMask{1} << card) - 1;
      for (std::uint64_t r = 0; r < total; ++r) {
        if (!flat_has_dedicated(p, mask)) {
          failure = mask;
          break;
        }
        mask = next_same_popcount(mask);
      }
    }

    if (failure)
      return FirstFailure{*failure, examined_before + rank_colex(*failure) + 1};
    examined_before += total;
  }
  return std::nullopt;
}

AlphaMask scan_bad_union(const FlatPattern& p) {
  const AlphaMask full = p.full();
  const std::size_t threads = resolve_thread_count();

  auto sweep = [&p](AlphaMask begin, AlphaMask end) {
    AlphaMask bad = 0;
    for (AlphaMask alpha = begin; alpha < end; ++alpha)
      if ((alpha & ~bad) != 0 && !flat_has_dedicated(p, alpha)) bad |= alpha;
    return bad;
  };

  if (threads <= 1 || p.n() <= 20) return sweep(1, full + 1);

  std::vector<AlphaMask> partial(threads, 0);
  std::vector<std::thread> pool;
  AlphaMask chunk = full / threads + 1;
  for (std::size_t t = 0; t < threads; ++t) {
    AlphaMask begin = 1 + t * chunk;
    AlphaMask end = std::min(full + 1, begin + chunk);
    pool.emplace_back([&, t, begin, end] { partial[t] = sweep(begin, end); });
  }
  for (auto& th : pool) th.join();
  AlphaMask bad = 0;
  for (AlphaMask m : partial) bad |= m;
  return bad;
}

bool flat_is_ssc(const FlatPattern& p) { return !scan_first_failure(p).has_value(); }

}  // namespace detail

SscReport is_ssc_exact(const StructuredNetwork& net, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 63);  // 2^n bookkeeping lives in uint64
  if (net.state_count() > limit)
    throw TooLarge("exact check over " + std::to_string(net.state_count()) +
                   " nodes exceeds the limit of " + std::to_string(limit));
  if (!is_accessible(net)) throw NotAccessible();

  detail::FlatPattern p = detail::flatten(net);
  SscReport report;
  if (auto failure = detail::scan_first_failure(p)) {
    report.is_ssc = false;
    report.witness = net.labels_of(failure->mask);
    report.subsets_examined = failure->rank;
  } else {
    report.is_ssc = true;
    report.subsets_examined = p.full();  // 2^n - 1
  }
  return report;
}

std::vector<NodeId> ssc_nodes(const StructuredNetwork& net, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 63);
  if (net.state_count() > limit)
    throw TooLarge("ssc_nodes over " + std::to_string(net.state_count()) +
                   " nodes exceeds the limit of " + std::to_string(limit));
  if (!is_accessible(net)) throw NotAccessible();

  detail::FlatPattern p = detail::flatten(net);
  AlphaMask bad = detail::scan_bad_union(p);
  return net.labels_of(p.full() & ~bad);
}

}  // namespace ssc
