#pragma once

#include <stdexcept>
#include <string>

namespace doorlab {

// Bad input: out-of-range points, malformed families, wrong cardinalities.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An operation was called on a value that does not meet its precondition
// (e.g. lemma1_check on a topology that is not connected-door).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Requested size exceeds what an enumeration mode supports.
class CapabilityError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// The descriptor needs a free ultrafilter, which no finite set carries.
class UnconstructibleError : public DomainError {
public:
  UnconstructibleError()
      : DomainError("unconstructible: free ultrafilters do not exist on finite sets") {}
};

// An exhaustive check found a counterexample to a claim the engine verifies.
// The CLI maps this to exit status 1.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace doorlab
