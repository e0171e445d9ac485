// Absolute values on the integers as first-class values.
//
// An absolute value here is a multiplicative seminorm |.| : Z -> upper reals:
//
//     |0| = 0,   |1| = |-1| = 1,   |mn| = |m||n|,   |m+n| <= |m| + |n|,
//
// evaluated through stage-indexed upper bounds.  The standard constructions
// (trivial, euclidean, p-adic, p-characteristic, and power twists of the
// latter two) carry a closed-form descriptor under which every value is an
// exact power term, so algebraic laws can be decided exactly.  Evaluators
// without a descriptor expose only bounds; checks against them degrade to
// Pass/Inconclusive, never to a refutation a finite bound cannot support.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ostk/bigint.hpp"
#include "ostk/dedekind.hpp"
#include "ostk/powcmp.hpp"
#include "ostk/rational.hpp"
#include "ostk/upper_real.hpp"

namespace ostk::absval {

// ---------------------------------------------------------------------------
// Closed forms

enum class CFKind { Trivial, Euclid, Padic, PChar, PowerEuclid, PowerPadic };

const char* cf_kind_name(CFKind k);

// A closed-form description of a standard absolute value.  Construct through
// the factories, which validate parameters (Errc::BadParameter on a bad
// exponent range or a non-prime p).
struct ClosedForm {
  CFKind kind = CFKind::Trivial;
  arith::BigInt p;            // the prime, for the p-indexed kinds
  arith::ExtRational lambda;  // the exponent, for the power kinds

  static ClosedForm trivial();
  static ClosedForm euclid();
  static ClosedForm padic(const arith::BigInt& p);
  static ClosedForm pchar(const arith::BigInt& p);
  // n |-> |n|^lambda, defined for lambda in [0, 1].
  static ClosedForm power_euclid(const arith::Rational& lambda);
  // n |-> (p^{ord_p n})^lambda, defined for lambda in [-inf, 0]; lambda = -1
  // is the plain p-adic value and lambda = -inf the p-characteristic one.
  static ClosedForm power_padic(const arith::BigInt& p,
                                const arith::ExtRational& lambda);

  // The exponent a classifier should recover: 0 (trivial), 1 (euclidean),
  // -1 (p-adic), -inf (p-characteristic), or the power twist's own exponent.
  arith::ExtRational canonical_lambda() const;
  // True when some integer certifiably has |n| < 1.
  bool non_archimedean() const;
  bool prime_indexed() const;
  std::string str() const;
  // Re-checks the factory invariants (used on deserialized values).
  void validate() const;
};

// Exact |n| under a closed form, as a power term; an absent term is an exact
// zero (n = 0 always, and multiples of p under the p-characteristic kinds).
arith::Term cf_value(const ClosedForm& cf, const arith::BigInt& n);

// Zero-aware exact order on term values.
arith::Order cmp_term_term(const arith::Term& a, const arith::Term& b);
// Exact order of a rational (any sign) against a nonnegative term value.
arith::Order cmp_rat_term(const arith::Rational& x, const arith::Term& t);
// Product of two term values.  Defined whenever the factors share an
// exponent after unit normalization, which the outputs of any single closed
// form always do; anything else raises Errc::Internal.
arith::Term term_mul(const arith::Term& a, const arith::Term& b);

// ---------------------------------------------------------------------------
// Absolute values

// An absolute value on Z.  Values are shared handles: copying shares the
// per-integer memo.  By construction |0| is the certified zero, |±1| is one,
// and |n| = |-n| (evaluators are consulted only on |n| >= 2).
class AbsValue {
 public:
  using Evaluator = std::function<onesided::UpperReal(const arith::BigInt&)>;

  // Wraps an arbitrary bound-level evaluator.  The claimed descriptor, if
  // any, is the oracle that checks re-verify witnesses against.
  static AbsValue custom(std::string name, Evaluator fn,
                         std::optional<ClosedForm> descriptor = {});

  const std::string& name() const;
  const std::optional<ClosedForm>& descriptor() const;

  // The upper real |n|, memoized per |n|.
  onesided::UpperReal upper(const arith::BigInt& n) const;

 private:
  struct Impl {
    std::string name;
    std::optional<ClosedForm> cf;
    Evaluator fn;
    std::map<arith::BigInt, onesided::UpperReal> memo;
    std::mutex mu;
  };
  std::shared_ptr<Impl> impl_;
};

// The standard absolute value described by a closed form.  Rational values
// come out exact at every stage; irrational power values are approached by
// directed upper bounds within 2^-stage.
AbsValue make_standard(const ClosedForm& cf);

// Stage-indexed upper bound of |n|.
arith::ExtRational av_eval(const AbsValue& av, const arith::BigInt& n,
                           long stage);

// ---------------------------------------------------------------------------
// Budget-bounded checks

enum class Verdict { Pass, FailWitness, Inconclusive };

const char* verdict_name(Verdict v);

struct Window {
  long lo = 0;
  long hi = 0;
};

struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::Pass;
  arith::BigInt m, n;  // witness pair when verdict == FailWitness
  std::string detail;
  bool oracle_checked = false;  // a closed form re-verified the outcome
  bool oracle_agrees = false;   // ... and confirmed the violation intrinsic
  Window window;
  long stage = 0;
};

// Multiplicativity and the triangle inequality on sampled pairs from the
// window (plus a deterministic sweep of small pairs).  With a descriptor the
// laws are decided exactly on term values and the evaluator's bounds are
// held to the descriptor within 2^(1-stage) — a deviation is reported as
// FailWitness with oracle_agrees = false.  Without a descriptor only the
// bound-level convergence tests run, and a miss is Inconclusive: an upper
// bound at one stage cannot refute an identity between infima.
CheckReport check_axioms(const AbsValue& av, Window window, long stage,
                         long trials, std::uint64_t seed);

// The subtractive triangle inequality |m| <= |m+n| + |n| on all pairs of the
// window (which must sit inside the naturals), plus a cross-check that the
// triangle inequality over integer pairs of the window agrees with the
// conjunction (triangle + subtractive) over natural pairs.
CheckReport check_subtractive(const AbsValue& av, Window window, long stage);

// The ultrametric inequality |m+n| <= max(|m|, |n|) on all pairs of the
// window, scanned smallest-magnitude first so a reported witness is minimal.
CheckReport check_ultrametric(const AbsValue& av, Window window, long stage);

// ---------------------------------------------------------------------------
// Non-Archimedean detection (one-sided by design)

// Outcome of a witness search: engaged means |witness| < 1 was certified by
// the recorded upper bound.  A disengaged result is only ever "no witness
// found within budget" — the Archimedean property is never claimed.
struct NaResult {
  std::optional<arith::BigInt> witness;
  arith::Rational bound;  // the certifying bound (< 1) when engaged
  long budget = 0;
  long stage = 0;
  bool non_archimedean() const { return witness.has_value(); }
};

// Least n in [2, budget] whose stage bound is < 1.
NaResult detect_na(const AbsValue& av, long budget, long stage);

// ---------------------------------------------------------------------------
// Two-sided values

// |n| as a Dedekind real: exact when the closed-form value is rational, a
// shrinking bracket otherwise.  Requires a descriptor (Errc::NoClosedForm) —
// bound-level evaluators admit no sound lower bounds.
onesided::DedekindReal dedekindize(const AbsValue& av, const arith::BigInt& n);

// |x| for rational x via |num|/|den| with outward interval rounding.
// Requires a descriptor; raises Errc::ZeroDenominator when |den| = 0 (the
// p-characteristic kinds on suitable fractions).
onesided::DedekindReal extend_to_Q(const AbsValue& av,
                                   const arith::Rational& x);

}  // namespace ostk::absval
