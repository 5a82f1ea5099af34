#include "nsum/subset.hpp"

#include <algorithm>

namespace nsum {

namespace {

void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) fail(Errc::group_mismatch, "subsets live in different groups");
}

}  // namespace

GroupSubset GroupSubset::from_mask(const GroupSpec& g, std::uint64_t mask) {
  if (g.order() > 64) fail(Errc::invalid_spec, "from_mask requires group order <= 64");
  GroupSubset s(g);
  while (mask) {
    int bit = __builtin_ctzll(mask);
    s.insert(bit);
    mask &= mask - 1;
  }
  return s;
}

GroupSubset& GroupSubset::operator|=(const GroupSubset& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

GroupSubset& GroupSubset::operator&=(const GroupSubset& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

bool GroupSubset::operator==(const GroupSubset& o) const {
  return group_ == o.group_ && bits_ == o.bits_;
}

bool GroupSubset::is_subset_of(const GroupSubset& o) const {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~o.bits_[i]) return false;
  }
  return true;
}

bool GroupSubset::intersects(const GroupSubset& o) const {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & o.bits_[i]) return true;
  }
  return false;
}

GroupSubset sumset(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  if (A.empty() || B.empty()) fail(Errc::empty_set, "sumset requires nonempty operands");
  const GroupSpec& g = A.group();
  // Iterate the smaller operand, accumulate shifted images of the larger.
  const GroupSubset& small = A.size() <= B.size() ? A : B;
  const GroupSubset& large = A.size() <= B.size() ? B : A;
  GroupSubset out(g);
  small.each([&](int a) { large.each([&](int b) { out.insert(g.add(a, b)); }); });
  return out;
}

GroupSubset translate_set(int x, const GroupSubset& B) {
  if (B.empty()) fail(Errc::empty_set, "translate_set requires a nonempty set");
  const GroupSpec& g = B.group();
  GroupSubset out(g);
  B.each([&](int b) { out.insert(g.add(x, b)); });
  return out;
}

GroupSubset negate_set(const GroupSubset& C) {
  if (C.empty()) fail(Errc::empty_set, "negate_set requires a nonempty set");
  const GroupSpec& g = C.group();
  GroupSubset out(g);
  C.each([&](int c) { out.insert(g.neg(c)); });
  return out;
}

GroupSubset restricted_self_sumset(const GroupSubset& A) {
  if (A.size() < 2) fail(Errc::set_too_small, "restricted sumset requires |A| >= 2");
  const GroupSpec& g = A.group();
  GroupSubset out(g);
  std::vector<int> codes = A.codes();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      out.insert(g.add(codes[i], codes[j]));
    }
  }
  return out;
}

long long gamma_pairs(const GroupSubset& A, const GroupSubset& B, int g) {
  require_same_group(A, B);
  const GroupSpec& spec = A.group();
  spec.check_element(g);
  long long n = 0;
  A.each([&](int a) {
    if (B.contains(spec.sub(g, a))) ++n;
  });
  return n;
}

GroupSubset set_intersection(const GroupSubset& A, const GroupSubset& B) {
  GroupSubset out = A;
  out &= B;
  return out;
}

GroupSubset set_union(const GroupSubset& A, const GroupSubset& B) {
  GroupSubset out = A;
  out |= B;
  return out;
}

GroupSubset set_difference(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  GroupSubset out = A;
  B.each([&](int c) { out.erase(c); });
  return out;
}

}  // namespace nsum
