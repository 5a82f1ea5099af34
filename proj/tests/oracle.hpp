#pragma once

// Brute-force reference implementations for the test suites. Everything here
// enumerates subsequences directly and does its own mixed-radix arithmetic on
// the invariant factors, independent of the DP engine it is used to check.

#include <map>
#include <set>
#include <vector>

#include "nsum/sequence.hpp"

namespace oracle {

inline int add(const std::vector<int>& factors, int a, int b) {
  int out = 0;
  int stride = 1;
  for (int d : factors) {
    int ca = (a / stride) % d;
    int cb = (b / stride) % d;
    out += ((ca + cb) % d) * stride;
    stride *= d;
  }
  return out;
}

inline int scale(const std::vector<int>& factors, int k, int a) {
  int out = 0;
  for (int i = 0; i < k; ++i) out = add(factors, out, a);
  return out;
}

// Per-length subsequence sums by direct enumeration over all sub-multisets.
// sums[r] is the set of sums of the length-r subsequences, r in [0, |S|].
inline std::vector<std::set<int>> subsequence_sums(const nsum::Sequence& S) {
  const auto& factors = S.group().factors();
  std::vector<int> supp;
  for (int c = 0; c < S.group().order(); ++c) {
    if (S.multiplicities()[c] > 0) supp.push_back(c);
  }
  std::vector<std::set<int>> sums(S.length() + 1);
  std::vector<int> take(supp.size(), 0);
  while (true) {
    int len = 0;
    int sigma = 0;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      len += take[i];
      sigma = add(factors, sigma, scale(factors, take[i], supp[i]));
    }
    sums[len].insert(sigma);
    std::size_t i = 0;
    while (i < supp.size() && take[i] == S.multiplicity(supp[i])) {
      take[i] = 0;
      ++i;
    }
    if (i == supp.size()) break;
    ++take[i];
  }
  return sums;
}

inline std::set<int> sigma_all(const nsum::Sequence& S) {
  auto sums = subsequence_sums(S);
  std::set<int> out;
  for (std::size_t r = 1; r < sums.size(); ++r) out.insert(sums[r].begin(), sums[r].end());
  return out;
}

inline bool zero_sum_free(const nsum::Sequence& S) {
  auto all = oracle::sigma_all(S);
  return !all.contains(0);
}

inline std::set<int> to_set(const nsum::GroupSubset& A) {
  std::set<int> out;
  A.each([&](int c) { out.insert(c); });
  return out;
}

}  // namespace oracle
