#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "nsum/theorem.hpp"

namespace nsum {

enum class TraceBranch {
  main_chain,         // |A+B| + |C| already reaches k + t - 1
  k_le_3_squarefree,  // complement identity on {0} u Sigma_{<=k}(T)
};

const char* trace_branch_name(TraceBranch b);

// Every intermediate object and claim of the lower-bound construction,
// instantiated on one sequence with 0 not in Sigma_n(S).
struct TraceReport {
  std::string sequence;    // input literal
  std::string group;
  int n = 0, k = 0, t = 0;

  std::string translation;  // element mapped to 0 by the normalization
  std::string normalized;   // S after translation: 0^h T
  int h = 0;

  std::string t_seq;   // T
  std::string t0;      // maximal zero-sum subsequence of T
  std::string t1;      // T T0^-1
  int t0_len = 0;
  int r = 0;           // |supp(T0)|
  int ell = 0;         // |supp(T0) \ supp(T1)|
  std::string excluded;  // the ell support elements dropped from T1

  std::string u, v;
  std::string sigma_u;
  std::string a_set, b_set, c_set;

  // Claim verdicts; all true in a certified trace.
  bool excluded_not_in_t1_sums = false;  // {x_1..x_ell} meets Sigma(T1) nowhere
  bool ab_scherk_bound = false;          // |A+B| >= |A| + |B| - 1
  bool ab_c_disjoint = false;            // (A+B) meets C nowhere
  long long gamma_sigma_u = 0;           // pair count at sigma(U); must be 1
  bool a_inside_t0_tail = false;         // A inside Sigma_{>=|T0|-1}(T0)
  bool ab_inside_high_sums = false;      // A+B inside Sigma_{>=n-h}(T)
  bool c_inside_high_sums = false;
  bool gao_identity = false;             // Sigma_{>=n-h}(T) = Sigma_n(S)

  // Inequality-chain values.
  int sum_high_size = 0;     // |Sigma_{>=n-h}(T)| = |Sigma_n(S)|
  int ab_size = 0;
  int c_size = 0;
  int supp_u = 0;
  int supp_v = 0;
  int sigma_v_size = 0;
  int common_support = 0;    // |supp(U) meet supp(V)|
  int chain_final = 0;       // k + t - 2 + common_support

  TraceBranch branch = TraceBranch::main_chain;
  int certified = 0;          // final certified lower bound on |Sigma_n(S)|
  int actual_nsum_size = 0;

  // Complement fallback details, present when the branch was taken.
  bool fallback_entered = false;
  bool complement_identity = false;  // Sigma_{>=n-h}(T) = sigma(T) - ({0} u Sigma_{<=k}(T))
  int complement_value = 0;          // |{0} u Sigma_{<=k}(T)|
  std::string fallback_route;        // which bound closed it: support-count, pair-sums-*, ...

  // The empty-sum reading of Sigma_{>=|T0|-1}(T0) was needed (T0 empty).
  bool empty_sum_convention = false;

  // A certifying V other than the support-optimal one (k = 4 retry).
  std::optional<std::string> alternate_v;

  // Exhaustive mode summary: every maximal T0 witness x every optimal V.
  int choices_checked = 1;
  bool all_certified = true;
};

// Serialized report, byte-stable for identical inputs.
std::string to_json_string(const TraceReport& report, int indent = 2);

// Runs the construction. Requires |S| >= n + 1 and 0 not in Sigma_n(S)
// (condition-1 error otherwise). A violated claim raises a trace-failure
// error naming the claim and the objects involved.
TraceReport trace(const Sequence& S, bool exhaustive_choices = false);

struct CorpusStats {
  std::uint64_t traced = 0;
  std::uint64_t main_chain = 0;
  std::uint64_t fallback = 0;
  std::map<int, std::uint64_t> slack_histogram;  // actual |Sigma_n| minus certified
  std::map<std::string, std::uint64_t> fallback_routes;
};

// Re-enumerates the sweep and traces every condition-2 instance; any trace
// failure aborts with the failing instance in the error text.
CorpusStats trace_corpus(const SweepReport& report, bool exhaustive_choices, int workers = 1);

}  // namespace nsum
