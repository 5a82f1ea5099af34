#include "nsum/subsums.hpp"

#include <algorithm>
#include <cassert>

namespace nsum {

namespace {

// x -> x + g lookup for one support element.
std::vector<int> add_table(const GroupSpec& g, int elem) {
  std::vector<int> t(g.order());
  for (int x = 0; x < g.order(); ++x) t[x] = g.add(x, elem);
  return t;
}

void or_permuted(GroupSubset& dst, const GroupSubset& src, const std::vector<int>& perm) {
  src.each([&](int x) { dst.insert(perm[x]); });
}

}  // namespace

SumsProfile SumsProfile::compute(const Sequence& S) {
  if (S.empty()) fail(Errc::empty_sequence, "subsequence-sum profile of the empty sequence");
  const GroupSpec& g = S.group();
  SumsProfile p(g, S.length());
  p.sigma_ = S.sum();
  p.rows_.assign(S.length() + 1, GroupSubset(g));
  p.rows_[0].insert(0);

  int reached = 0;
  for (int elem = 0; elem < g.order(); ++elem) {
    int m = S.multiplicities()[elem];
    if (m == 0) continue;
    auto perm = add_table(g, elem);
    for (int copy = 0; copy < m; ++copy) {
      ++reached;
      for (int r = reached; r >= 1; --r) {
        or_permuted(p.rows_[r], p.rows_[r - 1], perm);
      }
    }
  }

  assert(reached == S.length());
  assert(p.rows_[S.length()] == GroupSubset::single(g, p.sigma_));
  return p;
}

const GroupSubset& SumsProfile::row(int r) const {
  if (r < 0 || r > length_) {
    fail(Errc::out_of_range, "profile row " + std::to_string(r) + " out of [0, " +
                                 std::to_string(length_) + "]");
  }
  return rows_[r];
}

GroupSubset SumsProfile::union_rows(int lo, int hi) const {
  if (lo < 0 || hi > length_ || lo > hi) {
    fail(Errc::out_of_range, "profile row range [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "] out of [0, " + std::to_string(length_) +
                                 "]");
  }
  GroupSubset out(group_);
  for (int r = lo; r <= hi; ++r) out |= rows_[r];
  return out;
}

GroupSubset sigma_exact(const SumsProfile& p, int r) {
  if (r < 1 || r > p.length()) {
    fail(Errc::out_of_range,
         "sum length " + std::to_string(r) + " out of [1, " + std::to_string(p.length()) + "]");
  }
  return p.row(r);
}

GroupSubset sigma_at_least(const SumsProfile& p, int l) {
  if (l < 1 || l > p.length()) {
    fail(Errc::out_of_range,
         "sum length " + std::to_string(l) + " out of [1, " + std::to_string(p.length()) + "]");
  }
  return p.union_rows(l, p.length());
}

GroupSubset sigma_at_most(const SumsProfile& p, int l) {
  if (l < 1 || l > p.length()) {
    fail(Errc::out_of_range,
         "sum length " + std::to_string(l) + " out of [1, " + std::to_string(p.length()) + "]");
  }
  return p.union_rows(1, l);
}

GroupSubset sigma_all(const SumsProfile& p) { return p.union_rows(1, p.length()); }

GroupSubset nsum_set(const SumsProfile& p) {
  int n = p.group().order();
  if (p.length() < n) {
    fail(Errc::sequence_too_short, "|S| = " + std::to_string(p.length()) +
                                       " below the group order " + std::to_string(n));
  }
  return p.row(n);
}

GroupSubset sigma_exact(const Sequence& S, int r) { return sigma_exact(SumsProfile::compute(S), r); }
GroupSubset sigma_at_least(const Sequence& S, int l) { return sigma_at_least(SumsProfile::compute(S), l); }
GroupSubset sigma_at_most(const Sequence& S, int l) { return sigma_at_most(SumsProfile::compute(S), l); }
GroupSubset sigma_all(const Sequence& S) { return sigma_all(SumsProfile::compute(S)); }
GroupSubset nsum_set(const Sequence& S) { return nsum_set(SumsProfile::compute(S)); }

bool is_zero_sum_free(const SumsProfile& p) {
  for (int r = 1; r <= p.length(); ++r) {
    if (p.row(r).contains(0)) return false;
  }
  return true;
}

bool is_zero_sum_free(const Sequence& S) {
  if (S.empty()) return true;
  return is_zero_sum_free(SumsProfile::compute(S));
}

int max_zero_sum_length(const SumsProfile& p) {
  for (int r = p.length(); r >= 1; --r) {
    if (p.row(r).contains(0)) return r;
  }
  return 0;
}

int max_zero_sum_length(const Sequence& S) {
  if (S.empty()) return 0;
  return max_zero_sum_length(SumsProfile::compute(S));
}

namespace {

// Per-support prefix profiles: prefix[i] holds the achievable (length, sum)
// family using only the support elements strictly before index i. Lets the
// witness scan fix multiplicities from the largest code downward.
struct PrefixTables {
  std::vector<int> supp;                            // support codes ascending
  std::vector<std::vector<GroupSubset>> prefix;     // prefix[i]: rows 0..len(prefix_i)

  explicit PrefixTables(const Sequence& S) {
    const GroupSpec& g = S.group();
    supp = S.support().codes();
    prefix.reserve(supp.size() + 1);
    std::vector<GroupSubset> rows{GroupSubset::single(g, 0)};
    prefix.push_back(rows);
    int reached = 0;
    for (int i = 0; i < static_cast<int>(supp.size()); ++i) {
      int elem = supp[i];
      int m = S.multiplicities()[elem];
      auto perm = add_table(g, elem);
      for (int copy = 0; copy < m; ++copy) {
        rows.push_back(GroupSubset(g));
        ++reached;
        for (int r = reached; r >= 1; --r) or_permuted(rows[r], rows[r - 1], perm);
      }
      prefix.push_back(rows);
    }
  }

  // Achievable with elements of support index < i: length rem, sum target.
  bool feasible(int i, int rem, int target) const {
    const auto& rows = prefix[i];
    if (rem < 0 || rem >= static_cast<int>(rows.size())) return false;
    return rows[rem].contains(target);
  }
};

}  // namespace

std::vector<Sequence> zero_sum_witnesses(const Sequence& S, int r, std::size_t cap) {
  if (S.empty()) fail(Errc::empty_sequence, "witness scan over the empty sequence");
  if (r < 1 || r > S.length()) {
    fail(Errc::out_of_range,
         "witness length " + std::to_string(r) + " out of [1, " + std::to_string(S.length()) + "]");
  }
  const GroupSpec& g = S.group();
  PrefixTables tables(S);
  std::vector<Sequence> out;
  std::vector<int> chosen(g.order(), 0);

  // Fix multiplicities from the top support element down; taking the smallest
  // feasible count first yields ascending colex order.
  auto rec = [&](auto&& self, int i, int rem, int target) -> void {
    if (out.size() >= cap) fail(Errc::enumeration_overflow, "too many zero-sum witnesses");
    if (i == 0) {
      if (rem == 0 && target == 0) out.push_back(Sequence::from_multiplicities(g, chosen));
      return;
    }
    int elem = tables.supp[i - 1];
    int m = std::min(S.multiplicities()[elem], rem);
    for (int j = 0; j <= m; ++j) {
      int next_target = g.sub(target, g.scalar_mul(j, elem));
      if (tables.feasible(i - 1, rem - j, next_target)) {
        chosen[elem] = j;
        self(self, i - 1, rem - j, next_target);
        chosen[elem] = 0;
      }
    }
  };
  rec(rec, static_cast<int>(tables.supp.size()), r, 0);
  return out;
}

Sequence extract_zero_sum_subsequence(const Sequence& S, int r) {
  if (S.empty()) fail(Errc::empty_sequence, "witness extraction from the empty sequence");
  if (r < 1 || r > S.length()) {
    fail(Errc::out_of_range,
         "witness length " + std::to_string(r) + " out of [1, " + std::to_string(S.length()) + "]");
  }
  const GroupSpec& g = S.group();
  PrefixTables tables(S);
  if (!tables.feasible(static_cast<int>(tables.supp.size()), r, 0)) {
    fail(Errc::no_witness, "0 is not a length-" + std::to_string(r) + " subsequence sum");
  }
  std::vector<int> chosen(g.order(), 0);
  int rem = r;
  int target = 0;
  for (int i = static_cast<int>(tables.supp.size()); i >= 1; --i) {
    int elem = tables.supp[i - 1];
    int m = std::min(S.multiplicities()[elem], rem);
    for (int j = 0; j <= m; ++j) {
      int next_target = g.sub(target, g.scalar_mul(j, elem));
      if (tables.feasible(i - 1, rem - j, next_target)) {
        chosen[elem] = j;
        rem -= j;
        target = next_target;
        break;
      }
    }
  }
  assert(rem == 0 && target == 0);
  return Sequence::from_multiplicities(g, std::move(chosen));
}

std::vector<Sequence> subsequences_of_length(const Sequence& S, int r, std::size_t cap) {
  if (r < 0 || r > S.length()) {
    fail(Errc::out_of_range,
         "subsequence length " + std::to_string(r) + " out of [0, " + std::to_string(S.length()) + "]");
  }
  const GroupSpec& g = S.group();
  std::vector<int> supp;
  for (int c = 0; c < g.order(); ++c) {
    if (S.multiplicities()[c] > 0) supp.push_back(c);
  }
  // Available length among support indices < i, for pruning.
  std::vector<int> below(supp.size() + 1, 0);
  for (std::size_t i = 0; i < supp.size(); ++i) {
    below[i + 1] = below[i] + S.multiplicities()[supp[i]];
  }
  std::vector<Sequence> out;
  std::vector<int> chosen(g.order(), 0);
  // Fix counts from the largest code down, smallest count first: ascending
  // colex order of the produced multiplicity vectors.
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (out.size() >= cap) fail(Errc::enumeration_overflow, "too many subsequences");
    if (i == 0) {
      if (rem == 0) out.push_back(Sequence::from_multiplicities(g, chosen));
      return;
    }
    if (rem > below[i]) return;
    int elem = supp[i - 1];
    int m = std::min(S.multiplicities()[elem], rem);
    for (int j = 0; j <= m; ++j) {
      chosen[elem] = j;
      self(self, i - 1, rem - j);
    }
    chosen[elem] = 0;
  };
  rec(rec, supp.size(), r);
  return out;
}

}  // namespace nsum
