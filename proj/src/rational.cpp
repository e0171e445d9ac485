#include "ostk/rational.hpp"

#include "ostk/error.hpp"

namespace ostk::arith {

Rational::Rational(long n) {
  mpq_init(q_);
  mpq_set_si(q_, n, 1);
}

Rational::Rational(const BigInt& n) {
  mpq_init(q_);
  mpq_set_z(q_, n.raw());
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) fail(Errc::ZeroDenominator, "rational with denominator 0");
  mpq_init(q_);
  mpq_set_num(q_, num.raw());
  mpq_set_den(q_, den.raw());
  mpq_canonicalize(q_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den.is_zero()) fail(Errc::ZeroDenominator, "parsed denominator 0: '" + s + "'");
  return Rational(num, den);
}

Rational Rational::dyadic(const BigInt& mant, long exp2) {
  if (exp2 >= 0) return Rational(mant.shl(static_cast<unsigned long>(exp2)));
  return Rational(mant, BigInt::two_pow(static_cast<unsigned long>(-exp2)));
}

BigInt Rational::num() const {
  BigInt n;
  mpq_get_num(n.raw_mut(), q_);
  return n;
}

BigInt Rational::den() const {
  BigInt d;
  mpq_get_den(d.raw_mut(), q_);
  return d;
}

bool Rational::is_integer() const {
  return mpz_cmp_ui(mpq_denref(q_), 1) == 0;
}

bool Rational::is_power_of_two() const {
  if (sign() <= 0) return false;
  // Canonical form: exactly one of num/den is > 1, and it must be 2^k.
  const BigInt n = num(), d = den();
  auto pow2 = [](const BigInt& x) {
    return mpz_popcount(x.raw()) == 1;
  };
  return pow2(n) && pow2(d);
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(Errc::ZeroDenominator, "reciprocal of 0");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.q_, a.q_, b.q_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.q_, a.q_, b.q_);
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.q_, a.q_, b.q_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(Errc::ZeroDenominator, "rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_, q_, o.q_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_, q_, o.q_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_, q_, o.q_);
  return *this;
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.raw_mut(), mpq_numref(q_), mpq_denref(q_));
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.raw_mut(), mpq_numref(q_), mpq_denref(q_));
  return r;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) fail(Errc::ZeroDenominator, "0 to a negative power");
    return Rational(0);
  }
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r(num().pow(mag), den().pow(mag));
  return e < 0 ? r.reciprocal() : r;
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

// --- ExtRational -----------------------------------------------------------

const Rational& ExtRational::value() const {
  if (!is_finite()) fail(Errc::Internal, "value() on " + str());
  return v_;
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: return v_.str();
  }
  return "?";
}

ExtRational ExtRational::parse(const std::string& s) {
  if (s == "inf" || s == "+inf") return pos_inf();
  if (s == "-inf") return neg_inf();
  return ExtRational(Rational::parse(s));
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return ExtRational(a.v_ + b.v_);
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    fail(Errc::IndeterminateInfinity, "inf + -inf");
  return a.is_finite() ? b : a;
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return ExtRational(a.v_ * b.v_);
  const ExtRational& inf = a.is_finite() ? b : a;
  const ExtRational& other = a.is_finite() ? a : b;
  int s_other;
  if (other.is_finite()) {
    s_other = other.v_.sign();
    if (s_other == 0) fail(Errc::IndeterminateInfinity, "0 * inf");
  } else {
    s_other = other.is_pos_inf() ? 1 : -1;
  }
  const int s_inf = inf.is_pos_inf() ? 1 : -1;
  return (s_inf * s_other > 0) ? ExtRational::pos_inf() : ExtRational::neg_inf();
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: return ExtRational(-v_);
  }
  return *this;
}

const ExtRational& ExtRational::min(const ExtRational& a, const ExtRational& b) {
  return (a <=> b) <= 0 ? a : b;
}

const ExtRational& ExtRational::max(const ExtRational& a, const ExtRational& b) {
  return (a <=> b) >= 0 ? a : b;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  auto rank = [](ExtRational::Kind k) {
    return k == ExtRational::Kind::NegInf ? -1
           : k == ExtRational::Kind::Finite ? 0
                                            : 1;
  };
  const int ra = rank(a.kind_), rb = rank(b.kind_);
  if (ra != rb) return ra <=> rb;
  if (ra != 0) return std::strong_ordering::equal;  // same infinity
  return a.v_ <=> b.v_;
}

}  // namespace ostk::arith
