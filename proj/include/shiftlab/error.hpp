#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

// Malformed input: file formats, permutation strings, CLI arguments.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition does not hold (singular matrix, non-prime
// characteristic, mismatched sizes, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Something that the theory rules out happened anyway. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace shiftlab
