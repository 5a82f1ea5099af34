#include <doctest.h>

#include "nsum/literal.hpp"
#include "nsum/trace.hpp"
#include "oracle.hpp"

using namespace nsum;

TEST_CASE("worked trace: Z5 1^4 2^2") {
  auto S = parse_sequence("Z5: 1^4 2^2");
  auto r = trace(S);
  CHECK(r.n == 5);
  CHECK(r.k == 1);
  CHECK(r.t == 2);
  CHECK(r.translation == "1");
  CHECK(r.normalized == "Z5: 0^4 1^2");
  CHECK(r.h == 4);
  CHECK(r.t_seq == "Z5: 1^2");
  CHECK(r.t0 == "Z5:");
  CHECK(r.t0_len == 0);
  CHECK(r.ell == 0);
  CHECK(r.t1 == "Z5: 1^2");
  CHECK(r.v == "Z5:");
  CHECK(r.u == "Z5: 1^2");
  CHECK(r.sigma_u == "2");
  CHECK(r.a_set == "{0}");
  CHECK(r.b_set == "{2}");
  CHECK(r.c_set == "{1}");
  CHECK(r.gamma_sigma_u == 1);
  CHECK(r.ab_size == 1);
  CHECK(r.c_size == 1);
  CHECK(r.branch == TraceBranch::main_chain);
  CHECK(r.certified == 2);            // |A+B| + |C| = k + t - 1
  CHECK(r.actual_nsum_size == 2);
  CHECK(r.empty_sum_convention);      // T0 is empty here
  CHECK(r.gao_identity);
  CHECK(r.all_certified);
}

TEST_CASE("worked trace: Z4 1^3 2^2") {
  auto r = trace(parse_sequence("Z4: 1^3 2^2"));
  CHECK(r.k == 1);
  CHECK(r.t == 2);
  CHECK(r.normalized == "Z4: 0^3 1^2");
  CHECK(r.h == 3);
  CHECK(r.t0 == "Z4:");
  CHECK(r.t1 == "Z4: 1^2");
  CHECK(r.certified == 2);
  CHECK(r.certified <= r.actual_nsum_size);
  CHECK(r.branch == TraceBranch::main_chain);
}

TEST_CASE("condition-1 instances are rejected") {
  CHECK_THROWS_AS(trace(parse_sequence("Z2: 0 1^2")), Error);
  try {
    trace(parse_sequence("Z2: 0 1^2"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::condition1);
  }
  CHECK_THROWS_AS(trace(parse_sequence("Z4: 1^4")), Error);  // k = 0
  try {
    trace(parse_sequence("Z4: 1^4"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sequence_too_short);
  }
}

TEST_CASE("trace with a nonempty maximal zero-sum part") {
  // T = 1 2 4 5^2 holds two maximal zero-sums (1+2+4 and 4+5+5), both of
  // length 3 = n-h-1, and Sigma_{>=4}(T) = {1,2,3,5,6} misses 0.
  auto S = parse_sequence("Z7: 0^3 1 2 4 5^2");
  auto v = verify_instance(S);
  REQUIRE(v.outcome == Outcome::condition2);

  auto r = trace(S, true);
  CHECK(r.t0_len == 3);
  CHECK(r.t0 == "Z7: 1 2 4");  // colex-least witness leads
  CHECK(r.t1 == "Z7: 5^2");
  CHECK(r.ell == 3);
  CHECK(r.a_set == "{0,3,5,6}");
  CHECK(r.b_set == "{3}");
  CHECK(r.c_set == "{5}");
  CHECK(r.choices_checked == 2);  // both witnesses trace
  CHECK_FALSE(r.empty_sum_convention);
  CHECK(r.certified == 5);
  CHECK(r.certified == r.k + r.t - 1);
  CHECK(r.certified <= r.actual_nsum_size);
}

TEST_CASE("trace reports are byte-stable") {
  auto S = parse_sequence("Z8: 1^6 2^2 5");
  auto v = verify_instance(S);
  if (v.outcome == Outcome::condition1) return;  // guard; instance chosen to avoid this
  auto a = to_json_string(trace(S, true));
  auto b = to_json_string(trace(S, true));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("traced corpus over Z5 k=1 certifies everywhere") {
  SweepOptions opts;
  auto report = sweep(parse_group("Z5"), 1, opts);
  auto stats = trace_corpus(report, true, 2);
  CHECK(stats.traced == report.condition2);
  CHECK(stats.traced > 0);
  CHECK(stats.main_chain + stats.fallback == stats.traced);
  // Slack is the gap between the certificate and the truth; never negative.
  for (auto [slack, count] : stats.slack_histogram) {
    CHECK(slack >= 0);
    CHECK(count > 0);
  }
}

TEST_CASE("traced corpus over the order-4 groups, k=1 and k=2") {
  for (const auto& g : groups_of_order(4)) {
    for (int k = 1; k <= 2; ++k) {
      SweepOptions opts;
      auto report = sweep(g, k, opts);
      auto stats = trace_corpus(report, true, 2);
      CHECK(stats.traced == report.condition2);
    }
  }
}

TEST_CASE("certificates match the brute-force sums they bound") {
  SweepOptions opts;
  opts.tight_cap = 4096;
  auto report = sweep(parse_group("Z6"), 2, opts);
  auto stats = trace_corpus(report, false, 2);
  CHECK(stats.traced == report.condition2);

  // Cross-check a few explicit instances against the oracle.
  SequenceStream stream(parse_group("Z6"), 8);
  Sequence S(parse_group("Z6"));
  int examined = 0;
  while (stream.next(S) && examined < 25) {
    auto sums = oracle::subsequence_sums(S);
    if (sums[6].contains(0)) continue;
    ++examined;
    auto r = trace(S, true);
    CHECK(r.actual_nsum_size == static_cast<int>(sums[6].size()));
    CHECK(r.certified <= r.actual_nsum_size);
    CHECK(r.certified >= r.k + r.t - 1);
  }
  CHECK(examined > 0);
}

TEST_CASE("complement fallback fires and certifies") {
  // Z7 at k=2 stalls the main chain on 42 instances; every one closes through
  // the pair-sum bound on {0} u T1.
  SweepOptions opts;
  auto z7 = trace_corpus(sweep(parse_group("Z7"), 2, opts), false, 2);
  CHECK(z7.fallback == 42);
  CHECK(z7.fallback_routes.at("pair-sums-small") == 42);

  // Z6 at k=2 has stalls where T1 holds an involution, so the pair-sum lemma
  // hypothesis D meet -D = {0} fails and only the direct evaluation closes
  // the bound.
  auto z6 = trace_corpus(sweep(parse_group("Z6"), 2, opts), false, 2);
  CHECK(z6.fallback == 18);
  CHECK(z6.fallback_routes.at("direct") == 18);

  // Z9 at k=3 exercises the |D| = 5 truncation route.
  auto z9 = trace_corpus(sweep(parse_group("Z9"), 3, opts), false, 2);
  CHECK(z9.fallback_routes.at("set-sum-five") == 18);
}
