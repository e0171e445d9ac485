#pragma once

// Exact rationals, canonical at all times: lowest terms, positive
// denominator, reduction applied eagerly on construction and after every
// operation (GMP's mpq layer maintains precisely this form).  ExtRational
// adjoins the two infinities with the usual total order
// -inf < finite < +inf; the indeterminate combinations (+inf) + (-inf) and
// 0 * inf raise rather than guess — the one place a 0 * inf product is
// meaningful (an exactly-zero upper stream against an uninformative one) is
// resolved by the stream layer, which knows which zeros are exact.

#include <compare>
#include <cstdint>
#include <string>

#include "ostk/bigint.hpp"

namespace ostk::arith {

class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n);  // NOLINT: implicit by design
  Rational(int n) : Rational(static_cast<long>(n)) {}
  explicit Rational(const BigInt& n);
  Rational(const BigInt& num, const BigInt& den);  // ZeroDenominator
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Parses "a/b" or "a" (decimal, optional sign).  Errc::BadParameter on
  // junk, Errc::ZeroDenominator on "a/0".
  static Rational parse(const std::string& s);
  // mant * 2^exp2 — exact dyadic constructor.
  static Rational dyadic(const BigInt& mant, long exp2);
  static Rational two_pow(long e) { return dyadic(BigInt(1), e); }

  BigInt num() const;
  BigInt den() const;

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  bool is_integer() const;
  // True when this equals an integer power of two (2^k, k any sign).
  bool is_power_of_two() const;

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;  // ZeroDenominator on 0

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  BigInt floor() const;
  BigInt ceil() const;
  // Exact integer power; e < 0 requires a nonzero base (ZeroDenominator).
  Rational pow_int(long e) const;

  // Combined size of numerator and denominator in bits; a cheap complexity
  // measure used by the comparison kernels to pick strategies.
  std::size_t height_bits() const { return num().bit_length() + den().bit_length(); }

  // "a" when the denominator is 1, else "a/b".
  std::string str() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, long b) {
    int c = mpq_cmp_si(a.q_, b, 1);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  friend bool operator==(const Rational& a, long b) {
    return mpq_cmp_si(a.q_, b, 1) == 0;
  }

 private:
  mpq_t q_;
};

// Rationals extended with +inf / -inf.
class ExtRational {
 public:
  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(const Rational& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
  ExtRational(long v) : kind_(Kind::Finite), v_(v) {}             // NOLINT
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  const Rational& value() const;  // Errc::Internal unless finite

  // "inf", "-inf", or the rational form.
  std::string str() const;
  static ExtRational parse(const std::string& s);

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
  ExtRational operator-() const;

  static const ExtRational& min(const ExtRational& a, const ExtRational& b);
  static const ExtRational& max(const ExtRational& a, const ExtRational& b);

  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational v_;
};

}  // namespace ostk::arith
