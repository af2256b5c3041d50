#pragma once

#include <stdexcept>

namespace z4dna {

/// A construction whose inputs violate its preconditions (even length,
/// broken divisibility chain, non-monic generator, ...).
class BuildError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A verifier was asked to check a theorem on inputs outside its hypotheses.
class HypothesisViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its cap.
class TooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace z4dna
