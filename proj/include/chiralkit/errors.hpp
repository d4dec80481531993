#pragma once

#include <stdexcept>
#include <string>

namespace chiralkit {

// Error types named after the contract they enforce. Contract violations
// (degree bookkeeping, bad arguments) use std::invalid_argument directly.

struct NotClosedError : std::runtime_error {
  explicit NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

struct NonCriticalOriginError : std::runtime_error {
  explicit NonCriticalOriginError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroOnSphereError : std::runtime_error {
  explicit ZeroOnSphereError(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralDegreeError : std::runtime_error {
  explicit NonIntegralDegreeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotHarmonicError : std::runtime_error {
  explicit NotHarmonicError(const std::string& what) : std::runtime_error(what) {}
};

struct IndefiniteDefectError : std::runtime_error {
  explicit IndefiniteDefectError(const std::string& what) : std::runtime_error(what) {}
};

struct WrongSignError : std::runtime_error {
  explicit WrongSignError(const std::string& what) : std::runtime_error(what) {}
};

struct NonRegularValueError : std::runtime_error {
  explicit NonRegularValueError(const std::string& what) : std::runtime_error(what) {}
};

struct TransversalityFailureError : std::runtime_error {
  explicit TransversalityFailureError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at column " + std::to_string(position + 1) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace chiralkit
