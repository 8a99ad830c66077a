#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzsim {

// Argument outside the mathematical domain of an operation (p outside [0,1],
// zero frequency, n = 0, undefined visibility ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke an operation's precondition in a way that cannot be a
// numerical accident, e.g. reconstructing with a response from the other path.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Time went backwards for a stateful element.
class TimeOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chi-square with expected cell counts below the usual threshold.
class InsufficientSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration. `line` is 1-based; 0 when the error is
// not tied to a line of a config document (e.g. a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ConfigError(const std::string& what) : ConfigError(0, what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mzsim
