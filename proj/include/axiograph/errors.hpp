#pragma once

#include <stdexcept>
#include <string>

namespace axiograph {

// Error taxonomy mirrored by the CLI exit codes:
//   InputError      -> 1 (bad arguments, invalid parameters, domain violations)
//   ParseError      -> 2 (malformed input file; carries file and line)
//   InfeasibleError -> 3 (problem size beyond the enumeration cap)
//   InternalError   -> 4 (broken invariant; a bug, not a user mistake)
// UnsupportedError marks (operation, parameter) pairings that are defined
// to be out of scope, e.g. per-cluster contributions of the indicator
// quality; callers that can represent it as a verdict catch it.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::string file;
  int line;
  ParseError(std::string file_, int line_, const std::string& what_)
      : Error(file_ + ":" + std::to_string(line_) + ": " + what_),
        file(std::move(file_)),
        line(line_) {}
};

struct InfeasibleError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace axiograph
