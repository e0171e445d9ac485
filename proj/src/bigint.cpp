#include "ostk/bigint.hpp"

#include <cctype>

#include "ostk/error.hpp"

namespace ostk {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NonPositiveBase: return "NonPositiveBase";
    case Errc::IndeterminateInfinity: return "IndeterminateInfinity";
    case Errc::NegativeBound: return "NegativeBound";
    case Errc::BaseBelowOne: return "BaseBelowOne";
    case Errc::BadBase: return "BadBase";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NoClosedForm: return "NoClosedForm";
    case Errc::IncompatiblePair: return "IncompatiblePair";
    case Errc::InconsistentOracle: return "InconsistentOracle";
    case Errc::TrivialityNotRefuted: return "TrivialityNotRefuted";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ostk

namespace ostk::arith {

BigInt::BigInt(const std::string& dec) {
  // Accept an optional leading '-' followed by decimal digits only; GMP's
  // parser is laxer than that (whitespace, bases), which we do not want on
  // an input-validation path.
  std::size_t i = 0;
  if (i < dec.size() && (dec[i] == '-' || dec[i] == '+')) ++i;
  if (i == dec.size()) fail(Errc::BadParameter, "not an integer: '" + dec + "'");
  for (std::size_t j = i; j < dec.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(dec[j])))
      fail(Errc::BadParameter, "not an integer: '" + dec + "'");
  mpz_init(z_);
  if (mpz_set_str(z_, dec.c_str(), 10) != 0) {
    mpz_clear(z_);
    fail(Errc::BadParameter, "not an integer: '" + dec + "'");
  }
}

std::string BigInt::str() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

long BigInt::to_long() const {
  if (!fits_long()) fail(Errc::Internal, "BigInt out of long range: " + str());
  return mpz_get_si(z_);
}

unsigned long BigInt::to_ulong() const {
  if (sign() < 0 || !mpz_fits_ulong_p(z_))
    fail(Errc::Internal, "BigInt out of ulong range: " + str());
  return mpz_get_ui(z_);
}

BigInt BigInt::operator-() const {
  BigInt r;
  mpz_neg(r.z_, z_);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r;
  mpz_abs(r.z_, z_);
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_add(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_sub(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_mul(r.z_, a.z_, b.z_);
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  mpz_add(z_, z_, o.z_);
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  mpz_sub(z_, z_, o.z_);
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  mpz_mul(z_, z_, o.z_);
  return *this;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) fail(Errc::ZeroDenominator, "integer division by zero");
  BigInt q;
  mpz_tdiv_q(q.z_, a.z_, b.z_);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) fail(Errc::ZeroDenominator, "integer remainder by zero");
  BigInt r;
  mpz_tdiv_r(r.z_, a.z_, b.z_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) fail(Errc::ZeroDenominator, "integer division by zero");
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) fail(Errc::ZeroDenominator, "divisibility by zero");
  return mpz_divisible_p(z_, d.z_) != 0;
}

BigInt BigInt::shl(unsigned long bits) const {
  BigInt r;
  mpz_mul_2exp(r.z_, z_, bits);
  return r;
}

BigInt BigInt::shr_floor(unsigned long bits) const {
  BigInt r;
  mpz_fdiv_q_2exp(r.z_, z_, bits);
  return r;
}

BigInt BigInt::pow(unsigned long e) const {
  BigInt r;
  mpz_pow_ui(r.z_, z_, e);
  return r;
}

BigInt BigInt::sqrt_floor() const {
  if (sign() < 0) fail(Errc::BadParameter, "sqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.z_, z_);
  return r;
}

BigInt BigInt::root_floor(unsigned long k, bool* exact) const {
  if (k == 0) fail(Errc::BadParameter, "0th root");
  if (sign() < 0) fail(Errc::BadParameter, "root of negative integer");
  BigInt r;
  int ex = mpz_root(r.z_, z_, k);
  if (exact) *exact = (ex != 0);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::two_pow(unsigned long e) {
  BigInt r(1);
  mpz_mul_2exp(r.z_, r.z_, e);
  return r;
}

}  // namespace ostk::arith
