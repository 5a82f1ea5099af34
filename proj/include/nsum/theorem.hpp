#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsum/subsums.hpp"

namespace nsum {

enum class Outcome {
  condition1,       // 0 in Sigma_n(S)
  condition2,       // 0 not in Sigma_n(S) and |Sigma_n(S)| >= k + t - 1
  counterexample,   // neither
};

const char* outcome_name(Outcome o);

// Decision for one instance: S of length n + k over a group of order n with
// t distinct elements; the bound is k + t - 1 (k + t in self-test mode).
struct TheoremVerdict {
  Sequence sequence;
  int n = 0;
  int k = 0;
  int t = 0;
  bool zero_in_nsum = false;
  int nsum_size = 0;
  int bound = 0;
  Outcome outcome = Outcome::condition1;
};

// Requires |S| >= n + 1 so that k >= 1. `inflate_bound` raises the bound to
// k + t, the self-test mode that must manufacture counterexamples.
TheoremVerdict verify_instance(const Sequence& S, bool inflate_bound = false);

struct SweepOptions {
  int workers = 1;
  int tight_cap = 64;
  bool self_test = false;        // inflate the bound to k + t
  bool automorphism_filter = false;
  std::uint64_t chunk_size = 4096;
  std::uint64_t checkpoint_interval = 1u << 18;
  std::string checkpoint_path;   // empty = no checkpointing
  std::uint64_t stop_after = 0;  // 0 = run to completion; else pause at this rank
};

// Persistent cursor of a partially completed sweep.
struct SweepCheckpoint {
  std::string group_literal;
  int n = 0;
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t next_rank = 0;
  std::uint64_t condition1 = 0;
  std::uint64_t condition2 = 0;
  std::uint64_t skipped = 0;  // dropped by the automorphism filter
  std::uint64_t tight_count = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<std::string> tight;
  std::vector<std::string> counterexamples;
  bool self_test = false;
  bool automorphism_filter = false;
  int tight_cap = 64;

  std::string serialize() const;
  static SweepCheckpoint deserialize(const std::string& text);
  void save(const std::string& path) const;
  static SweepCheckpoint load(const std::string& path);
};

struct SweepReport {
  std::string group_literal;
  int n = 0;
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t condition1 = 0;
  std::uint64_t condition2 = 0;
  std::uint64_t skipped = 0;
  std::uint64_t tight_count = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<std::string> tight;            // capped at tight_cap, rank order
  std::vector<std::string> counterexamples;  // capped at tight_cap, rank order
  bool self_test = false;
  bool complete = true;  // false when stop_after paused the sweep
};

// Verifies every multiset of length n + k over the group, in colex rank
// order. Resuming from a checkpoint continues at its rank with its tallies.
SweepReport sweep(const GroupSpec& group, int k, const SweepOptions& options,
                  const SweepCheckpoint* resume = nullptr);

// First counterexample over groups of order order_lo..order_hi (enumeration
// order) and k = 1..k_max, or nothing. With self_test the bound is inflated,
// so a hit validates the pipeline.
std::optional<TheoremVerdict> search_counterexample(int order_lo, int order_hi, int k_max,
                                                    bool self_test, const SweepOptions& options);

}  // namespace nsum
