#include "nsum/lemmas.hpp"

#include <algorithm>

#include "nsum/literal.hpp"
#include "nsum/parallel.hpp"
#include "nsum/rng.hpp"

namespace nsum {

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::scherk: return "scherk";
    case LemmaId::disjoint_bound: return "disjoint";
    case LemmaId::gao_reduction: return "gao";
    case LemmaId::set_sum_bound: return "set-bound";
    case LemmaId::zsf_support_bound: return "zsf-support";
    case LemmaId::restricted_sumset: return "restricted";
  }
  return "?";
}

namespace {

// A as a squarefree sequence, for the set-level sum statistics.
Sequence as_sequence(const GroupSubset& A) {
  std::vector<int> mult(A.group().order(), 0);
  A.each([&](int c) { mult[c] = 1; });
  return Sequence::from_multiplicities(A.group(), std::move(mult));
}

LemmaVerdict settle(LemmaId id, long long lhs, long long rhs, bool holds,
                    const std::string& witness) {
  LemmaVerdict v{id, holds, lhs, rhs, std::nullopt};
  if (!holds) v.witness = witness;
  return v;
}

int count_involutions(const GroupSpec& g, const GroupSubset& A) {
  int n = 0;
  A.each([&](int c) { n += g.element_order(c) == 2; });
  return n;
}

}  // namespace

LemmaVerdict check_scherk(const GroupSubset& A, const GroupSubset& B) {
  if (A.empty() || B.empty()) fail(Errc::precondition, "scherk requires nonempty sets");
  auto meet = set_intersection(A, negate_set(B));
  if (!(meet == GroupSubset::single(A.group(), 0))) {
    fail(Errc::precondition, "scherk requires A meet (-B) = {0}, got " + format_subset(meet));
  }
  long long lhs = sumset(A, B).size();
  long long rhs = A.size() + B.size() - 1;
  return settle(LemmaId::scherk, lhs, rhs, lhs >= rhs,
                "A=" + format_subset(A) + " B=" + format_subset(B));
}

LemmaVerdict check_disjoint_bound(const Sequence& S, const std::vector<Sequence>& parts) {
  if (S.empty()) fail(Errc::precondition, "disjoint bound requires a nonempty sequence");
  if (!is_zero_sum_free(S)) {
    fail(Errc::precondition, "disjoint bound requires a zero-sum free sequence");
  }
  Sequence joined(S.group());
  for (const auto& part : parts) joined = joined.concat(part);
  if (!joined.divides(S)) {
    fail(Errc::precondition, "parts are not disjoint subsequences of S");
  }
  long long lhs = sigma_all(S).size();
  long long rhs = 0;
  for (const auto& part : parts) {
    if (!part.empty()) rhs += sigma_all(part).size();
  }
  std::string witness = "S=" + format_sequence(S);
  for (const auto& part : parts) witness += " part=" + format_sequence(part);
  return settle(LemmaId::disjoint_bound, lhs, rhs, lhs >= rhs, witness);
}

LemmaVerdict check_gao_reduction(const Sequence& S) {
  const GroupSpec& g = S.group();
  int n = g.order();
  if (S.length() < n) fail(Errc::precondition, "|S| must be at least the group order");
  int m = S.multiplicity(0);
  Sequence T = S.remove(Sequence::repeated(g, 0, m));
  if (T.max_multiplicity() > m) {
    fail(Errc::precondition, "h(T) = " + std::to_string(T.max_multiplicity()) +
                                 " exceeds the zero multiplicity m = " + std::to_string(m));
  }

  GroupSubset left(g);
  if (T.empty()) {
    left.insert(0);
  } else {
    left = sigma_at_least(T, std::max(1, n - m));
  }
  auto right = nsum_set(S);
  bool holds = left == right;
  return settle(LemmaId::gao_reduction, left.size(), right.size(), holds,
                "S=" + format_sequence(S) + " left=" + format_subset(left) +
                    " right=" + format_subset(right));
}

LemmaVerdict check_set_sum_bound(const GroupSubset& A) {
  if (A.empty()) fail(Errc::precondition, "set sum bound requires a nonempty set");
  auto seq = as_sequence(A);
  auto sums = sigma_all(seq);
  if (sums.contains(0)) {
    fail(Errc::precondition, "0 in Sigma(A) for A=" + format_subset(A));
  }
  int size = A.size();
  bool strong = size >= 4 || (size == 3 && count_involutions(A.group(), A) != 1);
  long long lhs = sums.size();
  long long rhs = strong ? 2LL * size : 2LL * size - 1;
  return settle(LemmaId::set_sum_bound, lhs, rhs, lhs >= rhs, "A=" + format_subset(A));
}

LemmaVerdict check_zsf_support_bound(const Sequence& S) {
  if (S.empty()) fail(Errc::precondition, "support bound requires a nonempty sequence");
  auto profile = SumsProfile::compute(S);
  if (!is_zero_sum_free(profile)) {
    fail(Errc::precondition, "support bound requires a zero-sum free sequence");
  }
  long long lhs = sigma_all(profile).size();
  long long rhs = S.length() + S.support_size() - 1;
  return settle(LemmaId::zsf_support_bound, lhs, rhs, lhs >= rhs, "S=" + format_sequence(S));
}

ZsfStrictness zsf_strictness(const Sequence& S, const LemmaVerdict& v) {
  ZsfStrictness out;
  out.strict = v.lhs > v.rhs;
  int involutions = 0;
  S.support().each([&](int c) {
    if (S.group().element_order(c) == 2) ++involutions;
  });
  out.exception_listed = S.length() <= 2 || (S.length() == 3 && involutions == 1);
  return out;
}

LemmaVerdict check_restricted_sumset(const GroupSubset& A) {
  if (A.empty()) fail(Errc::precondition, "restricted sumset bound requires a nonempty set");
  auto meet = set_intersection(A, negate_set(A));
  if (!(meet == GroupSubset::single(A.group(), 0))) {
    fail(Errc::precondition, "requires A meet (-A) = {0}, got " + format_subset(meet));
  }
  int size = A.size();
  if (size < 3) fail(Errc::precondition, "requires |A| >= 3");
  long long lhs = restricted_self_sumset(A).size();
  long long rhs = size <= 5 ? size : size + 1;
  return settle(LemmaId::restricted_sumset, lhs, rhs, lhs >= rhs, "A=" + format_subset(A));
}

void LemmaSweepReport::absorb(const LemmaSweepReport& other) {
  checked += other.checked;
  held += other.held;
  violated += other.violated;
  if (!witness && other.witness) witness = other.witness;
  strict += other.strict;
  equality_exception_listed += other.equality_exception_listed;
  equality_unlisted += other.equality_unlisted;
  for (const auto& e : other.equality_unlisted_examples) {
    if (equality_unlisted_examples.size() >= 16) break;
    equality_unlisted_examples.push_back(e);
  }
}

namespace {

void tally(LemmaSweepReport& report, const LemmaVerdict& v) {
  ++report.checked;
  if (v.holds) {
    ++report.held;
  } else {
    ++report.violated;
    if (!report.witness) report.witness = v.witness;
  }
}

// Subsets containing 0 with size in [min_size, max_size]; order must fit one word.
template <class Fn>
void for_each_zero_subset(const GroupSpec& g, int min_size, int max_size, Fn fn) {
  if (g.order() > 30) fail(Errc::invalid_spec, "exhaustive subset sweep limited to order <= 30");
  std::uint64_t top = std::uint64_t(1) << g.order();
  for (std::uint64_t mask = 1; mask < top; mask += 2) {  // odd masks contain code 0
    int pop = __builtin_popcountll(mask);
    if (pop < min_size || pop > max_size) continue;
    fn(GroupSubset::from_mask(g, mask));
  }
}

std::vector<GroupSpec> groups_up_to(int max_order) {
  std::vector<GroupSpec> out;
  for (int n = 1; n <= max_order; ++n) {
    for (auto& g : groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

LemmaSweepReport sweep_scherk(int max_order, int max_size, int workers) {
  LemmaSweepReport report{LemmaId::scherk};
  auto groups = groups_up_to(max_order);
  parallel_chunks<LemmaSweepReport>(
      groups.size(), 1, workers,
      [&](std::uint64_t lo, std::uint64_t) {
        const GroupSpec& g = groups[lo];
        LemmaSweepReport local{LemmaId::scherk};
        std::vector<GroupSubset> pool;
        for_each_zero_subset(g, 1, max_size, [&](GroupSubset A) { pool.push_back(std::move(A)); });
        for (const auto& A : pool) {
          auto negA = negate_set(A);
          for (const auto& B : pool) {
            // A meet (-B) = {0} is equivalent to (-A) meet B = {0}.
            auto meet = set_intersection(negA, B);
            if (!(meet == GroupSubset::single(g, 0))) continue;
            tally(local, check_scherk(A, B));
          }
        }
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

LemmaSweepReport sweep_restricted(int max_order, int min_size, int max_size, int workers) {
  LemmaSweepReport report{LemmaId::restricted_sumset};
  auto groups = groups_up_to(max_order);
  parallel_chunks<LemmaSweepReport>(
      groups.size(), 1, workers,
      [&](std::uint64_t lo, std::uint64_t) {
        const GroupSpec& g = groups[lo];
        LemmaSweepReport local{LemmaId::restricted_sumset};
        for_each_zero_subset(g, std::max(3, min_size), max_size, [&](const GroupSubset& A) {
          if (!(set_intersection(A, negate_set(A)) == GroupSubset::single(g, 0))) return;
          tally(local, check_restricted_sumset(A));
        });
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

LemmaSweepReport sweep_set_sum_bound(int max_order, int max_size, int workers) {
  LemmaSweepReport report{LemmaId::set_sum_bound};
  auto groups = groups_up_to(max_order);
  parallel_chunks<LemmaSweepReport>(
      groups.size(), 1, workers,
      [&](std::uint64_t lo, std::uint64_t) {
        const GroupSpec& g = groups[lo];
        LemmaSweepReport local{LemmaId::set_sum_bound};
        if (g.order() > 30) fail(Errc::invalid_spec, "sweep limited to order <= 30");
        std::uint64_t top = std::uint64_t(1) << g.order();
        for (std::uint64_t mask = 2; mask < top; mask += 2) {  // 0 in A puts 0 in Sigma(A)
          int pop = __builtin_popcountll(mask);
          if (pop < 1 || pop > max_size) continue;
          auto A = GroupSubset::from_mask(g, mask);
          if (sigma_all(as_sequence(A)).contains(0)) continue;
          tally(local, check_set_sum_bound(A));
        }
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

LemmaSweepReport sweep_zsf_support(int max_order, int max_len, int workers) {
  LemmaSweepReport report{LemmaId::zsf_support_bound};
  struct Job {
    GroupSpec group;
    int length;
  };
  std::vector<Job> jobs;
  for (auto& g : groups_up_to(max_order)) {
    for (int len = 1; len <= max_len; ++len) jobs.push_back({g, len});
  }
  parallel_chunks<LemmaSweepReport>(
      jobs.size(), 1, workers,
      [&](std::uint64_t lo, std::uint64_t) {
        const auto& job = jobs[lo];
        LemmaSweepReport local{LemmaId::zsf_support_bound};
        SequenceStream stream(job.group, job.length);
        Sequence S(job.group);
        while (stream.next(S)) {
          if (!is_zero_sum_free(S)) continue;
          auto v = check_zsf_support_bound(S);
          tally(local, v);
          auto strictness = zsf_strictness(S, v);
          if (strictness.strict) {
            ++local.strict;
          } else if (strictness.exception_listed) {
            ++local.equality_exception_listed;
          } else {
            ++local.equality_unlisted;
            if (local.equality_unlisted_examples.size() < 16) {
              local.equality_unlisted_examples.push_back(format_sequence(S));
            }
          }
        }
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

LemmaSweepReport random_gao(long long samples, int max_order, std::uint64_t seed, int workers) {
  LemmaSweepReport report{LemmaId::gao_reduction};
  auto groups = groups_up_to(max_order);
  parallel_chunks<LemmaSweepReport>(
      samples, 256, workers,
      [&](std::uint64_t lo, std::uint64_t hi) {
        LemmaSweepReport local{LemmaId::gao_reduction};
        for (std::uint64_t i = lo; i < hi; ++i) {
          Rng rng = Rng(seed).fork(i);
          const GroupSpec& g = groups[rng.below(groups.size())];
          int n = g.order();
          // S = 0^m T with nonzero T elements, h(T) <= m, |S| >= n. The
          // reduced index n - m must stay >= 1 for nonempty T, so m <= n - 1;
          // the empty-T degenerate case is sampled explicitly.
          Sequence S(g);
          if (n == 1 || rng.below(20) == 0) {
            S = Sequence::repeated(g, 0, rng.range(n, n + 4));
          } else {
            int m = rng.range(1, n - 1);
            int lo = std::max(n - m, 1);
            long long capacity = static_cast<long long>(m) * (n - 1);
            int len = static_cast<int>(std::min<long long>(lo + rng.range(0, 4), capacity));
            // Draw T uniformly among elements that still have room, so
            // h(T) <= m holds by construction; the checker re-validates it.
            std::vector<int> room;
            for (int e = 1; e < n; ++e) room.push_back(m);
            std::vector<int> elems;
            elems.reserve(len);
            for (int j = 0; j < len; ++j) {
              int pick;
              do {
                pick = 1 + static_cast<int>(rng.below(n - 1));
              } while (room[pick - 1] == 0);
              --room[pick - 1];
              elems.push_back(pick);
            }
            S = Sequence::repeated(g, 0, m).concat(Sequence::from_elements(g, elems));
          }
          tally(local, check_gao_reduction(S));
        }
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

LemmaSweepReport random_disjoint(long long samples, int max_order, std::uint64_t seed,
                                 int workers) {
  LemmaSweepReport report{LemmaId::disjoint_bound};
  auto groups = groups_up_to(max_order);
  parallel_chunks<LemmaSweepReport>(
      samples, 256, workers,
      [&](std::uint64_t lo, std::uint64_t hi) {
        LemmaSweepReport local{LemmaId::disjoint_bound};
        for (std::uint64_t i = lo; i < hi; ++i) {
          Rng rng = Rng(seed ^ 0x5bd1e995ULL).fork(i);
          const GroupSpec& g = groups[rng.below(groups.size())];
          if (g.order() == 1) continue;  // no zero-sum free sequences over Z1
          // Rejection-sample a zero-sum free sequence, engine as the filter.
          Sequence S(g);
          bool found = false;
          for (int attempt = 0; attempt < 100 && !found; ++attempt) {
            int len = rng.range(1, 6);
            std::vector<int> elems(len);
            for (int& e : elems) e = static_cast<int>(rng.below(g.order()));
            S = Sequence::from_elements(g, elems);
            found = is_zero_sum_free(S);
          }
          if (!found) continue;
          // Deal the elements into disjoint parts; a share may stay unused.
          int nparts = rng.range(1, 3);
          std::vector<Sequence> parts(static_cast<std::size_t>(nparts), Sequence(g));
          for (int c = 0; c < g.order(); ++c) {
            for (int j = 0; j < S.multiplicity(c); ++j) {
              int where = rng.range(0, nparts);
              if (where < nparts) parts[where] = parts[where].plus_element(c);
            }
          }
          std::erase_if(parts, [](const Sequence& p) { return p.empty(); });
          tally(local, check_disjoint_bound(S, parts));
        }
        return local;
      },
      [&](std::uint64_t, LemmaSweepReport r) { report.absorb(r); });
  return report;
}

}  // namespace nsum
