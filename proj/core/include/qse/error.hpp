#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qse {

// Input bytes that do not form a valid stream / instance. token_index is the
// 1-based index of the offending token where that makes sense, 0 otherwise.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, std::size_t token_index = 0)
      : std::runtime_error(what), token_index_(token_index) {}

  std::size_t token_index() const noexcept { return token_index_; }

private:
  std::size_t token_index_;
};

// A parameter outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A register configuration no valid run can produce (e.g. a counter asked to
// step below zero while uncomputing).
class StateError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace qse
