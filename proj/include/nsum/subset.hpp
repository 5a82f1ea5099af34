#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nsum/group.hpp"

namespace nsum {

// A set of group elements as a membership bitmap indexed by element code.
class GroupSubset {
public:
  explicit GroupSubset(GroupSpec g)
      : group_(std::move(g)), bits_((group_.order() + 63) / 64, 0) {}

  static GroupSubset single(const GroupSpec& g, int code) {
    GroupSubset s(g);
    s.insert(code);
    return s;
  }

  static GroupSubset of(const GroupSpec& g, std::initializer_list<int> codes) {
    GroupSubset s(g);
    for (int c : codes) s.insert(c);
    return s;
  }

  // Low word = codes 0..63; only meaningful for order <= 64.
  static GroupSubset from_mask(const GroupSpec& g, std::uint64_t mask);

  const GroupSpec& group() const { return group_; }

  bool contains(int code) const {
    group_.check_element(code);
    return (bits_[code >> 6] >> (code & 63)) & 1;
  }

  void insert(int code) {
    group_.check_element(code);
    bits_[code >> 6] |= std::uint64_t(1) << (code & 63);
  }

  void erase(int code) {
    group_.check_element(code);
    bits_[code >> 6] &= ~(std::uint64_t(1) << (code & 63));
  }

  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

  int size() const {
    int n = 0;
    for (std::uint64_t w : bits_) n += __builtin_popcountll(w);
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w) return false;
    }
    return true;
  }

  template <class Fn>
  void each(Fn fn) const {  // ascending code order
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
      std::uint64_t w = bits_[wi];
      while (w) {
        int bit = __builtin_ctzll(w);
        fn(static_cast<int>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> codes() const {
    std::vector<int> out;
    out.reserve(size());
    each([&](int c) { out.push_back(c); });
    return out;
  }

  GroupSubset& operator|=(const GroupSubset& o);
  GroupSubset& operator&=(const GroupSubset& o);
  bool operator==(const GroupSubset& o) const;
  bool is_subset_of(const GroupSubset& o) const;
  bool intersects(const GroupSubset& o) const;

private:
  GroupSpec group_;
  std::vector<std::uint64_t> bits_;
};

// A + B = {a + b}. The inputs must be nonempty.
GroupSubset sumset(const GroupSubset& A, const GroupSubset& B);

// x + B.
GroupSubset translate_set(int x, const GroupSubset& B);

// -C = {-c}.
GroupSubset negate_set(const GroupSubset& C);

// Sums of two distinct elements of A; requires |A| >= 2.
GroupSubset restricted_self_sumset(const GroupSubset& A);

// Number of ordered pairs (a, b) in A x B with a + b = g.
long long gamma_pairs(const GroupSubset& A, const GroupSubset& B, int g);

GroupSubset set_intersection(const GroupSubset& A, const GroupSubset& B);
GroupSubset set_union(const GroupSubset& A, const GroupSubset& B);
GroupSubset set_difference(const GroupSubset& A, const GroupSubset& B);

}  // namespace nsum
