#pragma once

// Exact comparison and directed bounding of rational powers.
//
// The objects compared here are terms r^e with r a positive rational and e a
// rational exponent.  Such a term is rarely rational itself, and its exponents
// can be far too large to multiply out, so comparisons go through three
// layers:
//
//   1. a cross-power fast path that multiplies out both sides when that is
//      demonstrably cheap;
//   2. an exact equality decision built on unique factorization (two powers
//      are equal iff both bases are integer powers of a common rational);
//   3. for the remaining strict cases, interval refinement on binary
//      logarithms with directed rounding, escalated until the intervals
//      separate.  Layer 2 has already ruled equality out, so this terminates.
//
// Everything below is integer arithmetic; no floating point is involved.

#include <optional>
#include <utility>
#include <vector>

#include "ostk/bigint.hpp"
#include "ostk/rational.hpp"

namespace ostk::arith {

enum class Order { Less, Equal, Greater };

const char* order_name(Order o);

inline Order cmp(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  return c < 0 ? Order::Less : c == 0 ? Order::Equal : Order::Greater;
}

// A closed rational interval [lo, hi], used for log enclosures.
struct QInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

// floor(log2 x) for x > 0 (Errc::NonPositiveBase otherwise).
long floor_log2(const Rational& x);

// Compare x against 2^e exactly.
Order cmp_two_pow(const Rational& x, long e);

// An enclosure [lo, hi] of log2 x with hi - lo <= 2^-k, for x > 0.
// Both endpoints are dyadic with denominator at most 2^(k+1), so they stay
// cheap to feed into exact follow-up checks.  When x is a power of two the
// enclosure is the exact point.  Raises Errc::NonPositiveBase for x <= 0 and
// Errc::Internal if directed squaring cannot certify k+1 binary digits even
// at the deepest retry precision.
QInterval log2_enclosure(const Rational& x, long k);

// The k-th root of a rational, when it is exactly rational.  k >= 1.
std::optional<Rational> rational_root_exact(const Rational& r, const BigInt& k);

// Largest j such that m is a perfect 2^j-th power, together with the
// corresponding root c (so m == c^(2^j) and c is not a perfect square).
// Requires m >= 2.
std::pair<BigInt, unsigned long> square_free_exponent_part(const BigInt& m);

// Exact dyadic logarithm: the integer k with q == m^(k / 2^n), if one
// exists.  Requires m >= 2 and q > 0.  Never approximates: a miss means no
// such k exists.
std::optional<BigInt> dyadic_log_exact(const BigInt& m, const Rational& q,
                                       unsigned long n);

// ceil(2^n * log_m q) as an exact integer, for m >= 2, q > 0.  Decides the
// exact-hit case through dyadic_log_exact and the rest by interval
// refinement (the value is then not an integer, so refinement terminates).
BigInt log_ceil_dyadic(const BigInt& m, const Rational& q, unsigned long n);

// Directed bounds on r^e for r > 0: a rational u with
//     pow_bound_lower <= r^e <= pow_bound_upper,
// each within 2^-s of r^e in BOTH absolute and relative error.  The relative
// guarantee matters: these bounds feed logarithms, where absolute closeness
// of a tiny value is worthless.  Exactly representable powers are returned
// exactly.  Raises Errc::NonPositiveBase for r <= 0.
Rational pow_bound_upper(const Rational& r, const Rational& e, long s);
Rational pow_bound_lower(const Rational& r, const Rational& e, long s);

// One power term r^e (r > 0).  An absent optional<PowTerm> stands for an
// exact zero; a present term always has a strictly positive value.
struct PowTerm {
  Rational base;
  Rational exp;
};
using Term = std::optional<PowTerm>;

// The exact rational value of a term, when it has one and is cheap enough to
// materialize (integer exponents of moderate size, or perfect roots).
std::optional<Rational> term_exact(const PowTerm& t);

// Exact order of a^ea versus b^eb.
Order cmp_terms(const PowTerm& a, const PowTerm& b);

// Exact order of x^e versus y.
inline Order pow_cmp(const Rational& x, const Rational& e, const Rational& y) {
  return cmp_terms(PowTerm{x, e}, PowTerm{y, Rational(1)});
}

// Exact order of a versus b + c.  Zero terms are delegated to the two-term
// comparison; mixed irrational ties must be excluded by the caller (the
// call sites in this library arrange that), and an undecided refinement
// eventually raises Errc::Internal rather than returning a guess.
Order cmp_pow_sum(const Term& a, const Term& b, const Term& c);

}  // namespace ostk::arith
