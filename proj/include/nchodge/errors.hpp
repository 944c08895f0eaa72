#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nchodge {

// Single error type for the whole library. `kind` is a stable machine-readable
// tag (e.g. "RingMismatch", "DivisorNotUnital"); what() carries the detail.
struct Error : std::runtime_error {
  std::string kind;

  Error(std::string kind_, const std::string& message)
      : std::runtime_error(kind_ + ": " + message), kind(std::move(kind_)) {}
};

[[noreturn]] inline void fail(const char* kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace nchodge
