#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordform {

/// Raised when an enumeration would exceed a configured ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  CeilingExceeded(const std::string& what, std::size_t ceiling)
      : std::runtime_error(what + " exceeds ceiling " + std::to_string(ceiling)),
        ceiling_(ceiling) {}
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t ceiling_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold for the given arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Ceilings {
  std::size_t elements = 200000;
  std::size_t subgroups = 20000;
};

}  // namespace wordform
