#pragma once

#include <stdexcept>
#include <string>

namespace freqop {

/// Thrown when a size or work guard would be exceeded (table size,
/// dense-vector qubit count, Monte Carlo work budget).
class GuardError : public std::runtime_error {
  public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a truncation window contains no integer index.
class EmptyWindowError : public std::runtime_error {
  public:
    explicit EmptyWindowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace freqop
