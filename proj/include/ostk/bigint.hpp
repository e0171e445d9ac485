#pragma once

// Arbitrary-precision signed integers as a value type.
//
// Backed by GMP's mpz layer, which already stores integers in canonical
// sign + magnitude form (no leading zero limbs, zero has a fixed
// representation) — exactly the representation contract this library needs.
// The wrapper adds value semantics, total ordering, and the handful of
// integer operations used by the exact kernels above it.  Nothing here ever
// rounds: every operation is exact or is an explicit floor/ceiling.

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>

namespace ostk::arith {

class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  BigInt(int v) : BigInt(static_cast<long>(v)) {}
  explicit BigInt(const std::string& dec);  // Errc::BadParameter on junk
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  std::string str() const;

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  bool even() const { return mpz_even_p(z_) != 0; }

  // Number of bits in |x|; 0 for x == 0.
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(z_, 2);
  }

  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const;       // Errc::Internal if out of range
  unsigned long to_ulong() const;  // Errc::Internal if negative/out of range

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  // Truncated division (C semantics). Errc::ZeroDenominator on b == 0.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  bool divisible_by(const BigInt& d) const;  // Errc::ZeroDenominator on d == 0

  // x * 2^bits and floor(x / 2^bits).
  BigInt shl(unsigned long bits) const;
  BigInt shr_floor(unsigned long bits) const;

  BigInt pow(unsigned long e) const;
  BigInt sqrt_floor() const;  // Errc::BadParameter if negative
  // Floor of the k-th root (k >= 1, operand >= 0); *exact set when the root
  // is exact.
  BigInt root_floor(unsigned long k, bool* exact = nullptr) const;

  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt two_pow(unsigned long e);  // 2^e

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, long b) {
    int c = mpz_cmp_si(a.z_, b);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  friend bool operator==(const BigInt& a, long b) {
    return mpz_cmp_si(a.z_, b) == 0;
  }

  // Read-only view for the few routines that talk to GMP directly.
  const mpz_t& raw() const { return z_; }
  mpz_t& raw_mut() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace ostk::arith
