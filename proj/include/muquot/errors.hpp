#pragma once

#include <stdexcept>
#include <string>

namespace muquot {

// Failure conditions raised across the library.  The CLI maps these onto
// its exit-code taxonomy, tests match on the code rather than the message.
enum class Errc {
  BadInput,          // malformed or inconsistent caller data
  DegreeZero,        // root finding asked for on a constant
  NonConvergence,    // an iteration hit its cap
  BothConstant,      // resultant of two constants
  IndexOutOfRange,
  NotSquare,
  SizeMismatch,
  SizeTooSmall,
  NotMonic,
  NotCyclic,         // Krylov matrix numerically singular
  SingularGroupElement,
  Singular,
  NotHermitian,
  Indeterminate,     // decision fell inside the margin band
  PoleAtZ,
  PoleAtW,
  PoleAtXi,
  BothZero,
  NotGeneric,
  MembershipFailure,
  QuotientRangeFailure,
  InterpolationMismatch,
  RetryExhausted,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace muquot
