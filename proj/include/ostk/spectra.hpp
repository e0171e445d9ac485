// Desk-scale prime ideals of the integers.
//
// A point here is either the principal ideal generated by a verified prime,
// or a "zero candidate": the explicit non-claim that no generator has been
// certified yet.  Certification is one-sided throughout — a bound |n| < 1 is
// a genuine membership witness, while the absence of witnesses within a
// budget never demonstrates the ideal is zero.
#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ostk/absvalue.hpp"
#include "ostk/bigint.hpp"
#include "ostk/rational.hpp"

namespace ostk::spectra {

struct PrimeIdealZ {
  bool principal = false;
  arith::BigInt p;  // the generator, when principal
  // Trial divisors that certified p prime (empty for the zero candidate).
  std::vector<arith::BigInt> primality_trail;

  static PrimeIdealZ zero_candidate();
  // Validates primality (Errc::NotPrime) and records the division trail.
  static PrimeIdealZ principal_of(const arith::BigInt& p);
  std::string str() const;  // generator, or "0-candidate"
};

// One certified membership statement: the recorded stage bound proves
// |n| < 1.
struct IdealWitness {
  arith::BigInt n;
  long stage = 0;
  arith::Rational bound;
};

struct IdealEvidence {
  std::vector<IdealWitness> witnesses;          // ascending n
  std::vector<arith::BigInt> gcd_trace;         // running gcd per witness
};

// Scans n in [2, budget] for certified |n| < 1 witnesses and extracts a
// generator from their gcd: no witnesses leaves a zero candidate; a prime
// gcd is the generator; gcd 1 contradicts primeness of the witnessed ideal
// (Errc::InconsistentOracle); a composite gcd falls back to its least prime
// factor that carries its own certificate, else stays a zero candidate with
// the evidence retained.
std::pair<PrimeIdealZ, IdealEvidence> detect_ideal(const absval::AbsValue& av,
                                                   long budget, long stage);

// Principal(p) contains the multiples of p; the zero candidate only 0.
bool ideal_member(const PrimeIdealZ& ideal, const arith::BigInt& n);

struct ExtractAmbiguous {
  std::vector<arith::BigInt> candidates;  // distinct primes, ascending
};
struct ExtractContradiction {};
using ExtractResult =
    std::variant<PrimeIdealZ, ExtractAmbiguous, ExtractContradiction>;

// The prime ideals containing every element of a nonzero list: gcd 1 means
// none exists (Contradiction); a gcd with a single distinct prime factor p
// pins the ideal to (p) — primeness of the ideal forces p inside; several
// distinct prime factors leave the candidates ambiguous.
ExtractResult extract_prime(const std::vector<arith::BigInt>& elements);

// Window check that S behaves like the positive trace of an ideal: closure
// under formal subtraction (m and m+n in S force n in S) and under multiples
// within [1, window_max].  Reports the first violation, subtraction first.
absval::CheckReport check_subtractive_ideal(
    const std::vector<arith::BigInt>& S, long window_max);

}  // namespace ostk::spectra
