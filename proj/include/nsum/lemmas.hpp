#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsum/subsums.hpp"

namespace nsum {

enum class LemmaId {
  scherk,            // A meet -B = {0}  =>  |A+B| >= |A|+|B|-1
  disjoint_bound,    // zero-sum free S  =>  |Sigma(S)| >= sum |Sigma(S_i)| over disjoint parts
  gao_reduction,     // S = 0^m T, h(T) <= m  =>  Sigma_{>=n-m}(T) = Sigma_n(S)
  set_sum_bound,     // set A, 0 not in Sigma(A)  =>  |Sigma(A)| >= 2|A|-1 (2|A| in strong cases)
  zsf_support_bound, // zero-sum free S  =>  |Sigma(S)| >= |S| + |supp(S)| - 1
  restricted_sumset, // A meet -A = {0}  =>  |A+.A| >= |A| (|A| in [3,5]) or |A|+1 (|A| >= 6)
};

const char* lemma_name(LemmaId id);

struct LemmaVerdict {
  LemmaId id;
  bool holds = false;
  long long lhs = 0;
  long long rhs = 0;
  // Present exactly when the verdict fails.
  std::optional<std::string> witness;
};

// Precondition: A meet (-B) = {0}; anything else is a precondition error,
// never a vacuous verdict.
LemmaVerdict check_scherk(const GroupSubset& A, const GroupSubset& B);

// Precondition: S zero-sum free and the parts disjoint inside S.
LemmaVerdict check_disjoint_bound(const Sequence& S, const std::vector<Sequence>& parts);

// S = 0^m T with m = v_0(S). Preconditions: |S| >= n and h(T) <= m. Verdict is
// exact set equality of Sigma_{>=n-m}(T) and Sigma_n(S); lhs/rhs are the two
// cardinalities. Degenerate readings: empty T compares {0} with Sigma_n(S),
// and m >= n lowers the left index to 1.
LemmaVerdict check_gao_reduction(const Sequence& S);

// A read as a squarefree sequence. Precondition: 0 not in Sigma(A). The bound
// strengthens from 2|A|-1 to 2|A| when |A| >= 4, or when |A| = 3 and A does
// not contain exactly one element of order two.
LemmaVerdict check_set_sum_bound(const GroupSubset& A);

// Precondition: S zero-sum free, |S| >= 1. Verdict is the weak bound
// |Sigma(S)| >= |S| + |supp(S)| - 1; strictness is reported separately by
// zsf_strictness because the advertised exception list does not cover
// repeated-element equality cases such as 1^3 over Z9.
LemmaVerdict check_zsf_support_bound(const Sequence& S);

struct ZsfStrictness {
  bool strict = false;            // lhs > rhs
  bool exception_listed = false;  // |S| <= 2, or |S| = 3 with exactly one involution
};
ZsfStrictness zsf_strictness(const Sequence& S, const LemmaVerdict& v);

// Precondition: A meet (-A) = {0} and |A| >= 3.
LemmaVerdict check_restricted_sumset(const GroupSubset& A);

// Aggregate result of an exhaustive or randomized run over one lemma.
struct LemmaSweepReport {
  LemmaId id;
  long long checked = 0;
  long long held = 0;
  long long violated = 0;
  std::optional<std::string> witness;  // first violation

  // zsf_support_bound only: empirical strictness tallies.
  long long strict = 0;
  long long equality_exception_listed = 0;
  long long equality_unlisted = 0;
  std::vector<std::string> equality_unlisted_examples;  // capped

  void absorb(const LemmaSweepReport& other);
};

// All groups of order <= max_order, all pairs A, B with 0 in both, sizes <=
// max_size, meeting the precondition.
LemmaSweepReport sweep_scherk(int max_order, int max_size, int workers = 1);

// All groups of order <= max_order, all subsets with A meet -A = {0} and
// |A| in [min_size, max_size].
LemmaSweepReport sweep_restricted(int max_order, int min_size, int max_size, int workers = 1);

// All groups of order <= max_order, all subsets with 0 not in Sigma(A),
// |A| <= max_size.
LemmaSweepReport sweep_set_sum_bound(int max_order, int max_size, int workers = 1);

// All zero-sum-free sequences of length <= max_len over groups of order <=
// max_order, weak bound everywhere plus strictness tallies.
LemmaSweepReport sweep_zsf_support(int max_order, int max_len, int workers = 1);

// Randomized preconditioned instances; every one must give exact set equality.
LemmaSweepReport random_gao(long long samples, int max_order, std::uint64_t seed, int workers = 1);

// Randomized zero-sum-free sequences split into disjoint parts.
LemmaSweepReport random_disjoint(long long samples, int max_order, std::uint64_t seed,
                                 int workers = 1);

}  // namespace nsum
