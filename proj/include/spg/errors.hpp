#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spg {

// Malformed or out-of-range input (bad vertex index, non-tree where a tree is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for otherwise valid input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact search would exceed a configured cap. Never replaced by an approximation.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap, std::size_t limit, std::size_t requested)
      : std::runtime_error("resource cap '" + cap + "' exceeded: limit " + std::to_string(limit) +
                           ", requested " + std::to_string(requested)),
        cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spg
