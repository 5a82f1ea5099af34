#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsum {

enum class Errc {
  invalid_spec,
  invalid_element,
  group_mismatch,
  not_a_subsequence,
  empty_set,
  set_too_small,
  out_of_range,
  empty_sequence,
  sequence_too_short,
  no_witness,
  precondition,
  condition1,
  trace_failure,
  parse,
  stale_checkpoint,
  enumeration_overflow,
  io,
  usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(Errc::parse, what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nsum
