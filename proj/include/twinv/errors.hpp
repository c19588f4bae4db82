#pragma once

#include <stdexcept>
#include <string>

namespace twinv {

/// Bad user input: malformed type spec, invalid permutation, unparsable vertex.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. levi_L on a non-maximal vertex).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Group enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that is proven to hold did not. Always a bug or a corrupted datum.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twinv
