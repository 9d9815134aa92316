#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace erlab {

/// Malformed input: wrong edge size, duplicate vertex, coloring that does not
/// match its graph, bad file syntax.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter outside the operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input that violates an operation's precondition. `witness` holds the
/// offending vertices (e.g. a monochromatic triangle or a non-linear edge pair).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::vector<std::size_t> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// A Ramsey comparison needed by a computation is not settled by the table.
class UnresolvedRamsey : public std::runtime_error {
 public:
  explicit UnresolvedRamsey(const std::string& entry)
      : std::runtime_error("unresolved Ramsey value: " + entry), entry_(entry) {}
  const std::string& entry() const { return entry_; }

 private:
  std::string entry_;
};

/// No verified colouring is available for the requested parameters.
class UnsupportedParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace erlab
