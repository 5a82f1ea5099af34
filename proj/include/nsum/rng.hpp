#pragma once

#include <cstdint>

namespace nsum {

// Deterministic splitmix64 stream. Same seed, same draws, on every platform;
// all randomized suites derive their instances from one of these.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling to stay exactly uniform.
    std::uint64_t limit = bound * (~std::uint64_t(0) / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Independent stream for a tagged sub-task.
  Rng fork(std::uint64_t tag) {
    Rng r(state_ ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
    r.next();
    return r;
  }

private:
  std::uint64_t state_;
};

}  // namespace nsum
