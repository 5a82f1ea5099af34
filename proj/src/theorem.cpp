#include "nsum/theorem.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "nsum/literal.hpp"
#include "nsum/parallel.hpp"

namespace nsum {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::condition1: return "condition1";
    case Outcome::condition2: return "condition2";
    case Outcome::counterexample: return "counterexample";
  }
  return "?";
}

TheoremVerdict verify_instance(const Sequence& S, bool inflate_bound) {
  const GroupSpec& g = S.group();
  int n = g.order();
  if (S.length() <= n) {
    fail(Errc::sequence_too_short,
         "need |S| >= n + 1 = " + std::to_string(n + 1) + ", got " + std::to_string(S.length()));
  }
  TheoremVerdict v{S};
  v.n = n;
  v.k = S.length() - n;
  v.t = S.support_size();
  auto sums = nsum_set(S);
  v.zero_in_nsum = sums.contains(0);
  v.nsum_size = sums.size();
  v.bound = v.k + v.t - 1 + (inflate_bound ? 1 : 0);
  if (v.zero_in_nsum) {
    v.outcome = Outcome::condition1;
  } else if (v.nsum_size >= v.bound) {
    v.outcome = Outcome::condition2;
  } else {
    v.outcome = Outcome::counterexample;
  }
  return v;
}

namespace {

using nlohmann::ordered_json;

ordered_json checkpoint_to_json(const SweepCheckpoint& c) {
  ordered_json j;
  j["version"] = 1;
  j["kind"] = "sweep-checkpoint";
  j["group"] = c.group_literal;
  j["n"] = c.n;
  j["k"] = c.k;
  j["total"] = c.total;
  j["next_rank"] = c.next_rank;
  j["condition1"] = c.condition1;
  j["condition2"] = c.condition2;
  j["skipped"] = c.skipped;
  j["tight_count"] = c.tight_count;
  j["counterexample_count"] = c.counterexample_count;
  j["tight"] = c.tight;
  j["counterexamples"] = c.counterexamples;
  j["self_test"] = c.self_test;
  j["automorphism_filter"] = c.automorphism_filter;
  j["tight_cap"] = c.tight_cap;
  return j;
}

}  // namespace

std::string SweepCheckpoint::serialize() const { return checkpoint_to_json(*this).dump(2) + "\n"; }

SweepCheckpoint SweepCheckpoint::deserialize(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::stale_checkpoint, std::string("unreadable checkpoint: ") + e.what());
  }
  SweepCheckpoint c;
  try {
    if (j.at("version").get<int>() != 1 || j.at("kind").get<std::string>() != "sweep-checkpoint") {
      fail(Errc::stale_checkpoint, "unsupported checkpoint version");
    }
    c.group_literal = j.at("group").get<std::string>();
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.total = j.at("total").get<std::uint64_t>();
    c.next_rank = j.at("next_rank").get<std::uint64_t>();
    c.condition1 = j.at("condition1").get<std::uint64_t>();
    c.condition2 = j.at("condition2").get<std::uint64_t>();
    c.skipped = j.at("skipped").get<std::uint64_t>();
    c.tight_count = j.at("tight_count").get<std::uint64_t>();
    c.counterexample_count = j.at("counterexample_count").get<std::uint64_t>();
    c.tight = j.at("tight").get<std::vector<std::string>>();
    c.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
    c.self_test = j.at("self_test").get<bool>();
    c.automorphism_filter = j.at("automorphism_filter").get<bool>();
    c.tight_cap = j.at("tight_cap").get<int>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::stale_checkpoint, std::string("malformed checkpoint: ") + e.what());
  }
  return c;
}

void SweepCheckpoint::save(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write checkpoint " + tmp);
    out << serialize();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(Errc::io, "cannot move checkpoint into place: " + ec.message());
}

SweepCheckpoint SweepCheckpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot read checkpoint " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(text);
}

namespace {

struct ChunkResult {
  std::uint64_t condition1 = 0;
  std::uint64_t condition2 = 0;
  std::uint64_t skipped = 0;
  std::uint64_t tight_count = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<std::string> tight;
  std::vector<std::string> counterexamples;
};

}  // namespace

SweepReport sweep(const GroupSpec& group, int k, const SweepOptions& options,
                  const SweepCheckpoint* resume) {
  if (k < 1) fail(Errc::invalid_spec, "the bound needs k >= 1");
  int n = group.order();
  int length = n + k;
  SequenceStream probe(group, length);
  std::uint64_t total = probe.total();
  std::string group_literal = format_group(group);

  SweepCheckpoint state;
  state.group_literal = group_literal;
  state.n = n;
  state.k = k;
  state.total = total;
  state.self_test = options.self_test;
  state.automorphism_filter = options.automorphism_filter;
  state.tight_cap = options.tight_cap;

  if (resume) {
    if (resume->group_literal != group_literal || resume->k != k || resume->total != total ||
        resume->self_test != options.self_test ||
        resume->automorphism_filter != options.automorphism_filter ||
        resume->tight_cap != options.tight_cap || resume->next_rank > total) {
      fail(Errc::stale_checkpoint,
           "checkpoint does not match this sweep (group " + resume->group_literal + ", k=" +
               std::to_string(resume->k) + ")");
    }
    state = *resume;
  }

  std::uint64_t stop_rank = options.stop_after == 0 ? total : std::min(total, options.stop_after);
  std::uint64_t first = state.next_rank;
  std::uint64_t span = stop_rank > first ? stop_rank - first : 0;
  std::uint64_t last_saved = first;

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    ChunkResult r;
    SequenceStream stream(group, length);
    stream.seek(first + lo);
    Sequence S(group);
    std::uint64_t countdown = hi - lo;
    while (countdown-- > 0) {
      bool ok = stream.next(S);
      if (!ok) fail(Errc::out_of_range, "enumeration ended early");
      if (options.automorphism_filter && !is_auto_minimal(S)) {
        ++r.skipped;
        continue;
      }
      auto v = verify_instance(S, options.self_test);
      switch (v.outcome) {
        case Outcome::condition1:
          ++r.condition1;
          break;
        case Outcome::condition2:
          ++r.condition2;
          if (v.nsum_size == v.bound) {
            ++r.tight_count;
            if (r.tight.size() < static_cast<std::size_t>(options.tight_cap)) {
              r.tight.push_back(format_sequence(S));
            }
          }
          break;
        case Outcome::counterexample:
          ++r.counterexample_count;
          if (r.counterexamples.size() < static_cast<std::size_t>(options.tight_cap)) {
            r.counterexamples.push_back(format_sequence(S));
          }
          break;
      }
    }
    return r;
  };

  auto merge = [&](std::uint64_t chunk_index, ChunkResult r) {
    state.condition1 += r.condition1;
    state.condition2 += r.condition2;
    state.skipped += r.skipped;
    state.tight_count += r.tight_count;
    state.counterexample_count += r.counterexample_count;
    for (auto& s : r.tight) {
      if (state.tight.size() < static_cast<std::size_t>(options.tight_cap)) {
        state.tight.push_back(std::move(s));
      }
    }
    for (auto& s : r.counterexamples) {
      if (state.counterexamples.size() < static_cast<std::size_t>(options.tight_cap)) {
        state.counterexamples.push_back(std::move(s));
      }
    }
    std::uint64_t hi = std::min(span, (chunk_index + 1) * options.chunk_size);
    state.next_rank = first + hi;
    if (!options.checkpoint_path.empty() && state.next_rank - last_saved >= options.checkpoint_interval) {
      state.save(options.checkpoint_path);
      last_saved = state.next_rank;
    }
  };

  parallel_chunks<ChunkResult>(span, options.chunk_size, options.workers, work, merge);

  state.next_rank = stop_rank;
  if (!options.checkpoint_path.empty()) state.save(options.checkpoint_path);

  SweepReport report;
  report.group_literal = group_literal;
  report.n = n;
  report.k = k;
  report.total = total;
  report.condition1 = state.condition1;
  report.condition2 = state.condition2;
  report.skipped = state.skipped;
  report.tight_count = state.tight_count;
  report.counterexample_count = state.counterexample_count;
  report.tight = state.tight;
  report.counterexamples = state.counterexamples;
  report.self_test = options.self_test;
  report.complete = stop_rank == total;
  return report;
}

std::optional<TheoremVerdict> search_counterexample(int order_lo, int order_hi, int k_max,
                                                    bool self_test, const SweepOptions& options) {
  if (order_lo < 1 || order_hi < order_lo) fail(Errc::invalid_spec, "bad order range");
  if (k_max < 1) fail(Errc::invalid_spec, "k range must include 1");
  SweepOptions opts = options;
  opts.self_test = self_test;
  opts.checkpoint_path.clear();
  for (int n = order_lo; n <= order_hi; ++n) {
    for (const auto& g : groups_of_order(n)) {
      for (int k = 1; k <= k_max; ++k) {
        auto report = sweep(g, k, opts);
        if (report.counterexample_count > 0) {
          auto S = parse_sequence(report.counterexamples.front());
          return verify_instance(S, self_test);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace nsum
