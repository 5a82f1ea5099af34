#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsum/group.hpp"

namespace nsum {

// Global run settings shared by every subcommand. The seed fully determines
// all randomized suites; reports are byte-identical across runs with the same
// configuration.
struct RunConfig {
  int max_order = kDefaultMaxOrder;
  int workers = 4;
  std::uint64_t checkpoint_interval = 1u << 18;
  std::string format = "json";  // json | csv
  std::uint64_t seed = 0;
};

// Entry point behind main(): parses argv, runs one subcommand, writes the
// report to stdout. Exit status: 0 all checks hold, 1 a mathematical
// violation or trace failure was found, 2 usage or configuration errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace nsum
