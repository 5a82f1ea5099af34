#pragma once

#include <span>
#include <string>
#include <vector>

#include "nsum/error.hpp"

namespace nsum {

inline constexpr int kDefaultMaxOrder = 4096;

// A finite abelian group in invariant-factor form Z_{d1} + ... + Z_{dm} with
// d1 | d2 | ... | dm and every di >= 2; the empty factor list is the trivial
// group. Elements are integer codes in [0, order) obtained by mixed-radix
// encoding of the coordinate vector, first factor least significant.
//
// GroupSpec is immutable after construction and freely shareable.
class GroupSpec {
public:
  GroupSpec() = default;  // trivial group, order 1

  // Accepts any direct-sum presentation (all factors >= 2, or an empty list)
  // and canonicalizes it into the invariant-factor chain, e.g. [6,4] -> [2,12].
  static GroupSpec from_factors(std::vector<int> factors, int max_order = kDefaultMaxOrder);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  bool trivial() const { return factors_.empty(); }
  int exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int scalar_mul(long long c, int a) const;

  // Least k >= 1 with k*a = 0: lcm over coordinates of d_i / gcd(d_i, c_i).
  int element_order(int a) const;

  int encode(std::span<const int> coords) const;
  std::vector<int> decode(int code) const;
  int coordinate(int code, int i) const;

  void check_element(int code) const;

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
};

// Exactly one GroupSpec per isomorphism class of abelian groups of order n,
// sorted by factor count, then lexicographically on the factor list:
// 8 -> [Z8, Z2xZ4, Z2xZ2xZ2].
std::vector<GroupSpec> groups_of_order(int n, int max_order = kDefaultMaxOrder);

// Prime factorization (prime, exponent), primes ascending.
std::vector<std::pair<int, int>> factorize(int n);

}  // namespace nsum
