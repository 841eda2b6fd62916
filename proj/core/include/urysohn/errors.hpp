#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace urysohn {

/// Input matrix or table has the wrong shape.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (empty subset, negative
/// distance, mismatched base, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition on an otherwise well-formed argument failed.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Random generation could not proceed (empty admissible interval).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document; field() names the offending entry.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// First failed axiom of a validation, with the indices that witness it.
struct Violation {
  std::string rule;
  std::vector<std::size_t> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace urysohn
