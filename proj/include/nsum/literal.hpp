#pragma once

#include <string>
#include <string_view>

#include "nsum/sequence.hpp"

namespace nsum {

// Text grammar used by the CLI, config files and all reports.
//
//   group     := Z<d1> [ x Z<d2> ... ]        case-insensitive, no whitespace;
//                Z1 is the trivial group
//   element   := <integer>                    for cyclic (and trivial) groups
//              | ( <c1>, <c2>, ... )          one coordinate per factor
//   sequence  := <group>: <element>[^<mult>] [<element>[^<mult>] ...]
//   set       := { <element>, <element>, ... }
//
// A group literal may use any direct-sum presentation (e.g. Z4xZ2, Z6xZ4);
// coordinates are read against the presentation as written and mapped through
// an isomorphism onto the canonical invariant-factor group, so formatted
// output is always canonical: format(parse(x)) is canonical and
// parse(format(S)) == S.

// A group literal as written, plus the isomorphism onto the canonical group.
class GroupPresentation {
public:
  // `factors` as written; empty = trivial group.
  static GroupPresentation from_factors(std::vector<int> factors, int max_order = kDefaultMaxOrder);
  static GroupPresentation parse(std::string_view text, int max_order = kDefaultMaxOrder);

  const GroupSpec& group() const { return canonical_; }
  const std::vector<int>& given_factors() const { return given_; }

  // Presentation coordinates -> canonical element code.
  int map_coords(std::span<const int> coords) const;

private:
  std::vector<int> given_;
  GroupSpec canonical_;
  std::vector<int> generator_images_;  // canonical code of each presentation generator
};

GroupSpec parse_group(std::string_view text, int max_order = kDefaultMaxOrder);
std::string format_group(const GroupSpec& g);

std::string format_element(const GroupSpec& g, int code);

Sequence parse_sequence(std::string_view text, int max_order = kDefaultMaxOrder);
std::string format_sequence(const Sequence& S);

// Set literal, elements written against the given presentation.
GroupSubset parse_subset(const GroupPresentation& pres, std::string_view text);
std::string format_subset(const GroupSubset& A);

}  // namespace nsum
