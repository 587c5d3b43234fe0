#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modmon {

// Input text that does not match a grammar. `position` is a byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A term that violates its structural invariants (bad operator index,
// wrong argument count, dangling bound index).
class MalformedTermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instances or representations that cannot be combined.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Typing or sort discipline violated.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by fuel-guarded operations used inside law descriptors; the harness
// records the sample as skipped.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted() : std::runtime_error("fuel exhausted") {}
};

// A sample generator could not produce a value.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modmon
