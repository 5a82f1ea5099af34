#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsum/subset.hpp"

namespace nsum {

// A finite multiset of group elements ("sequence over G"), stored as a dense
// multiplicity vector indexed by element code. Order of elements is
// irrelevant; all statistics are O(|G|).
class Sequence {
public:
  explicit Sequence(GroupSpec g) : group_(std::move(g)), mult_(group_.order(), 0) {}

  static Sequence from_multiplicities(GroupSpec g, std::vector<int> mult);
  static Sequence from_elements(const GroupSpec& g, std::span<const int> elems);
  static Sequence repeated(const GroupSpec& g, int code, int count);

  const GroupSpec& group() const { return group_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  int multiplicity(int code) const {
    group_.check_element(code);
    return mult_[code];
  }

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }

  // h(S), the maximum multiplicity.
  int max_multiplicity() const;

  GroupSubset support() const;
  int support_size() const;

  // sigma(S), the sum of all elements with multiplicity; 0 for the empty sequence.
  int sum() const;

  bool squarefree() const;

  Sequence concat(const Sequence& T) const;

  // True iff this | S, i.e. every multiplicity is <= the one in S.
  bool divides(const Sequence& S) const;

  // S T^{-1}; requires T | S.
  Sequence remove(const Sequence& T) const;

  // Replace every element x by x - g, so g maps to 0. Preserves length, h, |supp|.
  Sequence translate(int g) const;

  Sequence plus_element(int code, int count = 1) const;

  bool operator==(const Sequence& o) const { return group_ == o.group_ && mult_ == o.mult_; }

private:
  GroupSpec group_;
  std::vector<int> mult_;
  int length_ = 0;
};

// Number of multisets of the given size: C(order + length - 1, length),
// saturated to UINT64_MAX on overflow.
std::uint64_t multiset_count(int order, int length);

// Streams every multiset of `length` elements over the group exactly once, in
// colexicographic order of the multiplicity vector. Supports seeking to a rank
// for checkpoint/resume and for handing disjoint sub-ranges to workers.
class SequenceStream {
public:
  SequenceStream(GroupSpec g, int length);

  const GroupSpec& group() const { return group_; }
  int length() const { return length_; }

  // Total number of items; refuses to report a saturated count.
  std::uint64_t total() const;

  // Rank of the next item next() would produce.
  std::uint64_t rank() const { return rank_; }

  void seek(std::uint64_t rank);

  // Produces the item at rank() and advances; false when exhausted.
  bool next(Sequence& out);

private:
  void rebuild_mult();

  GroupSpec group_;
  int length_;
  std::uint64_t rank_ = 0;
  std::uint64_t total_ = 0;
  bool done_ = false;
  std::vector<int> elems_;            // weakly increasing element codes
  std::vector<int> mult_;
  std::vector<std::uint64_t> binom_;  // C(n, j) table, saturating, j <= length
  std::uint64_t binom(int n, int j) const;
};

// True iff the multiplicity vector is colex-minimal among its images under
// coordinate permutations of equal invariant factors. Groups without repeated
// factors have no such permutations, so everything is minimal.
bool is_auto_minimal(const Sequence& S);

// Code permutations induced by permuting coordinates of equal factors,
// identity first. Throws if there are more than `limit`.
std::vector<std::vector<int>> coordinate_permutations(const GroupSpec& g, std::size_t limit = 40320);

}  // namespace nsum
