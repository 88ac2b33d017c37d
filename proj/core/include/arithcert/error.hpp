#pragma once

#include <stdexcept>
#include <string>

namespace arithcert {

/// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A prime was required and the argument is composite (or < 2).
class NotPrime : public InvalidInput {
 public:
  explicit NotPrime(const std::string& what) : InvalidInput(what) {}
};

/// A nonzero value was required.
class ZeroInput : public InvalidInput {
 public:
  explicit ZeroInput(const std::string& what) : InvalidInput(what) {}
};

/// An invariant profile that no object can realize. `constraint()` names the
/// violated condition.
class Inadmissible : public InvalidInput {
 public:
  Inadmissible(std::string constraint, const std::string& what)
      : InvalidInput(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// Well-formed input that a construction engine declines (e.g. a Lie type
/// outside the supported census). The CLI maps this to exit code 1.
class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search finished without a hit. Distinct from a refutation.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arithcert
