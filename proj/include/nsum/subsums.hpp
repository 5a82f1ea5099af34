#pragma once

#include <cstdint>
#include <vector>

#include "nsum/sequence.hpp"

namespace nsum {

// The full family of fixed-length subsequence sums of a sequence S: row r is
// the set of sums of length-r subsequences for every r in [0, |S|]. Row 0 is
// the internal {0} convention for the empty subsequence; user-facing unions
// start at row 1.
//
// Invariants: every row is nonempty, row |S| = {sigma(S)}, and row r is the
// reflection sigma(S) - row(|S| - r).
class SumsProfile {
public:
  // Bounded-multiplicity DP over (length, sum): each support element g with
  // multiplicity m is folded in with m descending-length passes, so row r
  // accumulates taking j in [0, m] copies of g. Requires |S| >= 1.
  static SumsProfile compute(const Sequence& S);

  const GroupSpec& group() const { return group_; }
  int length() const { return length_; }
  int sigma() const { return sigma_; }

  const GroupSubset& row(int r) const;

  // Union of rows lo..hi inclusive; bounds must lie in [0, |S|].
  GroupSubset union_rows(int lo, int hi) const;

private:
  SumsProfile(GroupSpec g, int length) : group_(std::move(g)), length_(length) {}

  GroupSpec group_;
  int length_;
  int sigma_ = 0;
  std::vector<GroupSubset> rows_;
};

// Sigma_r(S): sums over length-r subsequences, 1 <= r <= |S|.
GroupSubset sigma_exact(const SumsProfile& p, int r);
// Sigma_{>=l}(S) = union of rows l..|S|, 1 <= l <= |S|.
GroupSubset sigma_at_least(const SumsProfile& p, int l);
// Sigma_{<=l}(S) = union of rows 1..l, 1 <= l <= |S|.
GroupSubset sigma_at_most(const SumsProfile& p, int l);
// Sigma(S) = union of rows 1..|S|.
GroupSubset sigma_all(const SumsProfile& p);
// Sigma_n(S) with n = |G|; requires |S| >= n.
GroupSubset nsum_set(const SumsProfile& p);

GroupSubset sigma_exact(const Sequence& S, int r);
GroupSubset sigma_at_least(const Sequence& S, int l);
GroupSubset sigma_at_most(const Sequence& S, int l);
GroupSubset sigma_all(const Sequence& S);
GroupSubset nsum_set(const Sequence& S);

// 0 not in Sigma(S); the empty sequence is zero-sum free.
bool is_zero_sum_free(const Sequence& S);
bool is_zero_sum_free(const SumsProfile& p);

// max{r >= 1 : 0 in Sigma_r(S)}, or 0 if S is zero-sum free.
int max_zero_sum_length(const Sequence& S);
int max_zero_sum_length(const SumsProfile& p);

// A concrete length-r subsequence summing to 0; among all witnesses, the one
// with the colexicographically smallest multiplicity vector. Requires
// 0 in Sigma_r(S).
Sequence extract_zero_sum_subsequence(const Sequence& S, int r);

// Every length-r zero-sum subsequence, ascending colex order of multiplicity
// vectors (so the first one matches extract_zero_sum_subsequence).
std::vector<Sequence> zero_sum_witnesses(const Sequence& S, int r,
                                         std::size_t cap = 1'000'000);

// All length-r subsequences of S, ascending colex order; the workhorse behind
// witness extraction, exposed for subsequence scans elsewhere.
std::vector<Sequence> subsequences_of_length(const Sequence& S, int r,
                                             std::size_t cap = 1'000'000);

}  // namespace nsum
