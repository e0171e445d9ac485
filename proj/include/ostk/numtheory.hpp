#pragma once

// Elementary number theory over BigInt: Bézout coefficients by the extended
// Euclidean algorithm, deterministic trial-division primality and
// factorization (no probabilistic tests anywhere — results feed exact
// certificates), p-adic order, and prime enumeration.  Deliberately
// desk-scale: trial division is O(sqrt n), which is the honest cost of a
// primality *proof* by exhaustion, and commands validate input magnitude
// before calling in.

#include <cstdint>
#include <vector>

#include "ostk/bigint.hpp"

namespace ostk::arith {

struct BezoutTriple {
  BigInt g;  // gcd(a, b) > 0
  BigInt x;  // coefficients with a*x + b*y == g
  BigInt y;
};

// Errc::BothZero when a == b == 0.
BezoutTriple gcd_bezout(const BigInt& a, const BigInt& b);

// Deterministic primality by trial division (2, 3, then 6k +/- 1 up to
// sqrt n).  When `trail` is given it receives the divisors actually tested —
// the exhaustion record that justifies a "prime" verdict.
bool is_prime(const BigInt& n, std::vector<BigInt>* trail = nullptr);

struct FactorPair {
  BigInt p;
  unsigned long e;
};
// Prime factorization of |n| in ascending prime order; empty iff |n| == 1.
// Errc::ZeroInput on n == 0.
using Factorization = std::vector<FactorPair>;
Factorization factorize(const BigInt& n);

// Largest e with p^e | n.  Errc::ZeroInput on n == 0, Errc::NotPrime when p
// fails trial division.
unsigned long ord_p(const BigInt& p, const BigInt& n);
// Same, for callers that established primality of p once up front.
unsigned long ord_p_unchecked(const BigInt& p, const BigInt& n);

// Ascending primes <= k (sieve of Eratosthenes); empty when k < 2.
// Errc::BadParameter on negative k.
std::vector<BigInt> primes_upto(const BigInt& k);

// The i-th prime, 0-based (prime_at(0) == 2).  Cached, grows on demand.
BigInt prime_at(std::size_t i);

// Number of primes <= n (same deterministic machinery as prime_at).
std::size_t prime_count_upto(unsigned long n);

// Deterministic 64-bit stream for seeded sampling (splitmix64 step — chosen
// over std::uniform_int_distribution because the standard leaves that
// distribution's output implementation-defined, and reports must be
// byte-identical everywhere).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform-ish value in [lo, hi] (inclusive); bias is < 2^-32 for the
  // desk-scale ranges used here and identical on every platform.
  long range(long lo, long hi);
};

}  // namespace ostk::arith
