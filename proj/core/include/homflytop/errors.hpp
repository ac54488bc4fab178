#pragma once

#include <stdexcept>
#include <string>

namespace homflytop {

/// Malformed or inadmissible input: bad documents, non-bipartite graphs,
/// incompatible root choices, parking functions that fail their definition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed a check that a theorem guarantees. Seeing one of
/// these means the implementation is wrong, not the input.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// The skein oracle refused a diagram above its crossing cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homflytop
