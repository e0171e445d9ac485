#pragma once

#include <stdexcept>
#include <string>

namespace ostk {

// Error conditions raised by library contracts.  Operations document which
// codes they can raise; callers that need to branch switch on code() instead
// of parsing messages.
enum class Errc {
  BothZero,               // gcd of (0, 0) requested
  ZeroInput,              // an argument that must be nonzero was zero
  NotPrime,               // a prime-typed argument failed trial division
  NonPositiveBase,        // power/log base must be positive
  IndeterminateInfinity,  // +inf + -inf, or 0 * inf outside the zero-token rule
  NegativeBound,          // a stream that must stay nonnegative produced < 0
  BaseBelowOne,           // exponentiation base certified below 1
  BadBase,                // log base below 2
  BadParameter,           // argument outside its documented range
  ZeroDenominator,        // division by zero (rational or absolute-value)
  NoClosedForm,           // operation needs a closed-form descriptor
  IncompatiblePair,       // ideal/exponent pair violates its compatibility law
  InconsistentOracle,     // evaluator produced evidence no absolute value can
  TrivialityNotRefuted,   // budgeted search found no non-triviality certificate
  Internal,               // invariant breach inside the library (a bug)
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what),
        code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) {
  throw Error(c, what);
}

}  // namespace ostk
