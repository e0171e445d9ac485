#pragma once

// Ostrowski's theorem, point-free and budget-bounded, in both directions.
//
// The classifier maps an absolute value to a classification point: a prime
// ideal of Z detected from certified witnesses together with a one-sided
// exponent, the infimum over primes m of log_m|m|, clamped to <= 1.  The
// reconstructor maps a compatible (ideal, exponent) pair back to an absolute
// value through
//
//     |n| = min{1, inf{(p^{ord_p n})^lambda : p prime in the ideal}}
//           * max{1, n^lambda},
//
// read with the exact-zero and empty-infimum (= +infinity) conventions.
// Round-trip checks verify the two maps invert each other to within the
// stage tolerance.  At the level of Q, every value with a closed form lands
// on a euclidean power or a p-adic power once non-triviality is certified;
// no operation here ever claims triviality or Archimedean-ness, since
// neither is certifiable at a finite stage.

#include <optional>
#include <string>
#include <variant>

#include "ostk/absvalue.hpp"
#include "ostk/bigint.hpp"
#include "ostk/dedekind.hpp"
#include "ostk/rational.hpp"
#include "ostk/spectra.hpp"
#include "ostk/upper_real.hpp"

namespace ostk::ostrowski {

// The two-component point the classifier produces: an ideal (a claim only
// when principal) and a one-sided exponent.
struct ClassificationPoint {
  spectra::PrimeIdealZ ideal;
  // Upper bounds on the exponent lambda = inf{log_m|m| : m prime}, clamped
  // to <= 1 at every stage.
  onesided::UpperReal lambda;
  // Two-sided exponent; only the rational-place classifier can produce one.
  std::optional<onesided::DedekindReal> dedekind_lambda;
  spectra::IdealEvidence evidence;
  // The first detection witness (|n| < 1 certified) when the ideal is
  // principal; a zero-candidate point never carries one.
  std::optional<spectra::IdealWitness> certificate;
};

// A place of Q in Ostrowski normal form: |.|_euclid^alpha with
// alpha in (0, 1], or |.|_p^alpha with alpha in (0, inf).
struct EuclidPow {
  onesided::DedekindReal alpha;
};
struct PadicPow {
  arith::BigInt p;
  onesided::DedekindReal alpha;
};
using QPlace = std::variant<EuclidPow, PadicPow>;

// The base-change constant max{0, log_b|b|} at the given stage.  For any
// absolute value this is base-independent and at most 1, so the returned
// bound is capped at 1 + 2^-stage.  Errc::BadBase when b < 2.
arith::ExtRational compute_M(const absval::AbsValue& av, const arith::BigInt& b,
                             long stage);

// The forward direction: detect the ideal from witnesses within the budget
// and assemble the exponent stream.  Never decides Archimedean vs.
// non-Archimedean — an undetected ideal stays a zero-candidate.
// Errc::BadParameter when prime_budget < 2.
ClassificationPoint classify(const absval::AbsValue& av, long prime_budget,
                             long stage);

// The backward direction from an exact exponent.  A principal ideal needs
// lambda < 0 (including -infinity), a zero-candidate needs lambda >= 0
// (values above 1 are clamped to 1); anything else is
// Errc::IncompatiblePair.  The result carries the closed form it provably
// equals, so downstream checks run exactly.
absval::AbsValue reconstruct(const spectra::PrimeIdealZ& ideal,
                             const arith::ExtRational& lambda);

// The backward direction from a classification point, using the point's
// exponent stream at a boosted stage.  A principal point must carry its
// witness certificate (Errc::IncompatiblePair otherwise).  The result is
// bound-level: no closed form is attached, because none is known.
absval::AbsValue reconstruct(const ClassificationPoint& point);

// Verifies both composites for a standard kind: reconstruct(classify(av))
// agrees with av on the window within 2^(1-stage) per integer, and
// classify(reconstruct(ideal, lambda)) on the kind's canonical pair returns
// the same ideal with the exponent within 2^(1-stage).
absval::CheckReport roundtrip_z(const absval::ClosedForm& kind,
                                long prime_budget, long stage,
                                absval::Window window);

// Least v <= v_max with gamma^v > (alpha v + beta) * gamma'^v, by exact
// rational comparison; nullopt when no v in range violates the bound.  Such
// a v exists for every gamma > gamma' once v_max is large enough, which is
// the computational content of "gamma <= gamma' or else".
// Errc::BadParameter unless alpha > 0, beta > 0, gamma >= 0, gamma' >= 0,
// v_max >= 1.
std::optional<long> ostrow_witness(const arith::Rational& alpha,
                                   const arith::Rational& beta,
                                   const arith::Rational& gamma,
                                   const arith::Rational& gamma_prime,
                                   long v_max);

// Ostrowski over Q: non-triviality must be certified within the budget,
// either by a witness |n| < 1 (the p-adic side) or by an integer whose exact
// value exceeds 1 (the euclidean side); otherwise Errc::TrivialityNotRefuted
// — "not refuted" is all a bounded search can say.  Requires a closed form
// (Errc::NoClosedForm): no generic extractor of two-sided exponents from
// bound-level evaluators exists.  The p-characteristic kinds vanish on a
// nonzero integer, hence do not extend to Q: Errc::BadParameter.
QPlace classify_q(const absval::AbsValue& av, long budget, long stage);

}  // namespace ostk::ostrowski
