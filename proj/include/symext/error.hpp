#pragma once

#include <stdexcept>
#include <string>

namespace symext {

// Computation or validation failure (bad input data, size guard, non-cocycle, ...).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user request (unknown token, bad flag value).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_usage(const std::string& msg) { throw UsageError(msg); }

}  // namespace symext
