#pragma once

#include <stdexcept>
#include <string>

namespace fibrekit {

/// Malformed input: unparsable files, unknown labels, bad rationals.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's precondition
/// (non-flag complex, singular matrix, disconnected graph, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource guard was hit (ball radius cap and similar).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fibrekit
