#include <doctest.h>

#include <random>

#include "nsum/literal.hpp"
#include "nsum/subsums.hpp"
#include "oracle.hpp"

using namespace nsum;

namespace {

Sequence random_sequence(std::mt19937_64& rng, int max_order, int max_len) {
  int order = 1 + static_cast<int>(rng() % max_order);
  auto groups = groups_of_order(order);
  const auto& g = groups[rng() % groups.size()];
  int len = 1 + static_cast<int>(rng() % max_len);
  std::vector<int> elems(len);
  for (int& e : elems) e = static_cast<int>(rng() % g.order());
  return Sequence::from_elements(g, elems);
}

}  // namespace

TEST_CASE("profile rows on small examples") {
  auto p = SumsProfile::compute(parse_sequence("Z3: 1^2"));
  CHECK(p.row(0) == GroupSubset::single(p.group(), 0));
  CHECK(p.row(1) == GroupSubset::single(p.group(), 1));
  CHECK(p.row(2) == GroupSubset::single(p.group(), 2));

  auto q = SumsProfile::compute(parse_sequence("Z5: 1^4 2^2"));
  CHECK(sigma_exact(q, 5) == GroupSubset::of(q.group(), {1, 2}));

  auto zeros = SumsProfile::compute(parse_sequence("Z4: 0^5"));
  for (int r = 0; r <= 5; ++r) CHECK(zeros.row(r) == GroupSubset::single(zeros.group(), 0));

  CHECK_THROWS_AS(SumsProfile::compute(parse_sequence("Z4:")), Error);
  CHECK_THROWS_AS(p.row(3), Error);
}

TEST_CASE("range unions") {
  auto p = SumsProfile::compute(parse_sequence("Z3: 1^2"));
  CHECK(sigma_at_least(p, 1) == GroupSubset::of(p.group(), {1, 2}));
  CHECK(sigma_at_least(p, 2) == GroupSubset::single(p.group(), 2));

  auto q = SumsProfile::compute(parse_sequence("Z4: 1^2 2"));
  CHECK(sigma_at_most(q, 2) == GroupSubset::of(q.group(), {1, 2, 3}));
  CHECK(sigma_at_least(q, q.length()) == GroupSubset::single(q.group(), q.sigma()));
  CHECK(sigma_all(q) == GroupSubset::of(q.group(), {0, 1, 2, 3}));

  CHECK_THROWS_AS(sigma_at_most(q, 0), Error);
  CHECK_THROWS_AS(sigma_at_least(q, 4), Error);
}

TEST_CASE("length-n sums") {
  CHECK(nsum_set(parse_sequence("Z4: 1^3 2^2")) == GroupSubset::of(parse_group("Z4"), {1, 2}));
  CHECK(nsum_set(parse_sequence("Z2: 0 1^2")) == GroupSubset::of(parse_group("Z2"), {0, 1}));
  CHECK(nsum_set(parse_sequence("Z3: 0^3")) == GroupSubset::single(parse_group("Z3"), 0));
  CHECK_THROWS_AS(nsum_set(parse_sequence("Z4: 1^3")), Error);
  try {
    nsum_set(parse_sequence("Z4: 1^3"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sequence_too_short);
  }
}

TEST_CASE("zero-sum statistics") {
  auto T = parse_sequence("Z4: 1 2 3^2");
  CHECK_FALSE(is_zero_sum_free(T));
  CHECK(max_zero_sum_length(T) == 3);
  auto w = extract_zero_sum_subsequence(T, 3);
  CHECK(w == parse_sequence("Z4: 2 3^2"));

  auto free = parse_sequence("Z5: 1^2");
  CHECK(is_zero_sum_free(free));
  CHECK(max_zero_sum_length(free) == 0);

  auto pair = parse_sequence("Z2: 1^2");
  CHECK(max_zero_sum_length(pair) == 2);
  CHECK(extract_zero_sum_subsequence(pair, 2) == pair);

  CHECK_THROWS_AS(extract_zero_sum_subsequence(free, 2), Error);
  try {
    extract_zero_sum_subsequence(free, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_witness);
  }
}

TEST_CASE("witness extraction takes the colex-smallest witness") {
  // In Z6, zero-sums of length 2: 1+5, 2+4, 3+3. Colex-smallest multiplicity
  // vector takes the least from the top codes: 1 and 5... the vector with the
  // smallest count at code 5 first; {3,3} has zero at codes 4 and 5.
  auto S = parse_sequence("Z6: 1 2 3^2 4 5");
  auto w = extract_zero_sum_subsequence(S, 2);
  CHECK(w == parse_sequence("Z6: 3^2"));

  auto all = zero_sum_witnesses(S, 2);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == parse_sequence("Z6: 3^2"));
  CHECK(all[1] == parse_sequence("Z6: 2 4"));
  CHECK(all[2] == parse_sequence("Z6: 1 5"));
}

TEST_CASE("profile equals brute force on random sequences") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 300; ++iter) {
    auto S = random_sequence(rng, 10, 10);
    auto p = SumsProfile::compute(S);
    auto expect = oracle::subsequence_sums(S);
    REQUIRE(p.length() == S.length());
    for (int r = 0; r <= S.length(); ++r) {
      CHECK(oracle::to_set(p.row(r)) == expect[r]);
    }
  }
}

TEST_CASE("reflection: row r = sigma - row(|S|-r)") {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 300; ++iter) {
    auto S = random_sequence(rng, 10, 10);
    auto p = SumsProfile::compute(S);
    for (int r = 0; r <= S.length(); ++r) {
      GroupSubset reflected(S.group());
      p.row(S.length() - r).each(
          [&](int c) { reflected.insert(S.group().sub(p.sigma(), c)); });
      CHECK(p.row(r) == reflected);
    }
  }
}

TEST_CASE("length-n sums are translation invariant") {
  std::mt19937_64 rng(107);
  for (int iter = 0; iter < 300; ++iter) {
    int order = 1 + static_cast<int>(rng() % 10);
    auto groups = groups_of_order(order);
    const auto& g = groups[rng() % groups.size()];
    int len = g.order() + static_cast<int>(rng() % 4);
    std::vector<int> elems(len);
    for (int& e : elems) e = static_cast<int>(rng() % g.order());
    auto S = Sequence::from_elements(g, elems);
    auto base = nsum_set(S);
    for (int shift = 0; shift < g.order(); ++shift) {
      CHECK(nsum_set(S.translate(shift)) == base);
    }
  }
}

TEST_CASE("rows only grow when the sequence grows") {
  std::mt19937_64 rng(109);
  for (int iter = 0; iter < 200; ++iter) {
    auto S = random_sequence(rng, 8, 8);
    auto T = random_sequence(rng, 1, 4);  // may be over another group; re-roll onto S's group
    std::vector<int> elems;
    for (int c = 0; c < S.group().order(); ++c) {
      for (int i = 0; i < static_cast<int>(rng() % 3); ++i) elems.push_back(c);
    }
    if (elems.empty()) elems.push_back(0);
    auto ext = S.concat(Sequence::from_elements(S.group(), elems));
    auto p = SumsProfile::compute(S);
    auto q = SumsProfile::compute(ext);
    for (int r = 1; r <= S.length(); ++r) CHECK(p.row(r).is_subset_of(q.row(r)));
    (void)T;
  }
}

TEST_CASE("every sequence of 2n-1 elements has a zero-sum of length n (orders <= 6)") {
  std::mt19937_64 rng(113);
  for (int order = 1; order <= 6; ++order) {
    for (const auto& g : groups_of_order(order)) {
      for (int iter = 0; iter < 100; ++iter) {
        std::vector<int> elems(2 * order - 1);
        for (int& e : elems) e = static_cast<int>(rng() % order);
        auto S = Sequence::from_elements(g, elems);
        CHECK(nsum_set(S).contains(0));
      }
    }
  }
}

TEST_CASE("subsequence listing") {
  auto S = parse_sequence("Z5: 1^2 3");
  auto subs = subsequences_of_length(S, 2);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0] == parse_sequence("Z5: 1^2"));
  CHECK(subs[1] == parse_sequence("Z5: 1 3"));
  CHECK(subsequences_of_length(S, 0).size() == 1);
  CHECK(subsequences_of_length(S, 3).size() == 1);
  CHECK_THROWS_AS(subsequences_of_length(S, 4), Error);
}
