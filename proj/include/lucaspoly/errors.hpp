#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lucaspoly {

/// Bad arguments: out-of-domain indices, zero divisors, non-prime moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation contradicted a theorem it relies on (an exact division that
/// must succeed did not, a coefficient that must be nonnegative is not, ...).
/// Never swallowed: these are counterexamples, not bugs in the input.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& claim, std::string dump)
      : std::runtime_error("theorem violation: " + claim), claim_(claim), dump_(std::move(dump)) {}

  const std::string& claim() const noexcept { return claim_; }
  /// Inputs plus serialized polynomials involved.
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string claim_;
  std::string dump_;
};

/// An exhaustive enumeration would exceed its object budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lucaspoly
