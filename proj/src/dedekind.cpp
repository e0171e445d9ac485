#include "ostk/dedekind.hpp"

#include <algorithm>

#include "ostk/error.hpp"
#include "ostk/powcmp.hpp"

namespace ostk::onesided {

using arith::pow_bound_lower;
using arith::pow_bound_upper;

DedekindReal DedekindReal::constant(const Rational& v) {
  auto impl = std::make_shared<Impl>();
  impl->raw = [v](long) { return Iv{v, v}; };
  return DedekindReal(std::move(impl));
}

DedekindReal DedekindReal::from_fn(Fn raw) {
  auto impl = std::make_shared<Impl>();
  impl->raw = std::move(raw);
  return DedekindReal(std::move(impl));
}

Iv DedekindReal::interval(long stage) const {
  if (stage < 0) stage = 0;
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& memo = impl_->memo;
  while (static_cast<long>(memo.size()) <= stage) {
    const long n = static_cast<long>(memo.size());
    Iv iv = impl_->raw(n);
    if (n > 0) {
      iv.lo = std::max(iv.lo, memo.back().lo);
      iv.hi = std::min(iv.hi, memo.back().hi);
    }
    if (iv.lo > iv.hi)
      fail(Errc::Internal, "interval stream stopped being nested");
    if (iv.width() > Rational::two_pow(-n))
      fail(Errc::Internal, "interval stream broke its width contract");
    memo.push_back(iv);
  }
  return memo[static_cast<std::size_t>(stage)];
}

UpperReal DedekindReal::upper() const {
  DedekindReal self = *this;
  return UpperReal::from_fn(
      [self](long n) { return ExtRational(self.interval(n).hi); });
}

LowerReal DedekindReal::lower() const {
  DedekindReal self = *this;
  return LowerReal::from_fn(
      [self](long n) { return ExtRational(self.interval(n).lo); });
}

DedekindReal ded_mul(const DedekindReal& a, const DedekindReal& b) {
  return DedekindReal::from_fn([a, b](long s) -> Iv {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const long t = s + 2 + 8 * attempt;
      const Iv ia = a.interval(t);
      const Iv ib = b.interval(t);
      const Rational c1 = ia.lo * ib.lo;
      const Rational c2 = ia.lo * ib.hi;
      const Rational c3 = ia.hi * ib.lo;
      const Rational c4 = ia.hi * ib.hi;
      Iv out{std::min(std::min(c1, c2), std::min(c3, c4)),
             std::max(std::max(c1, c2), std::max(c3, c4))};
      if (out.width() <= Rational::two_pow(-s)) return out;
    }
    fail(Errc::Internal, "product interval failed to shrink");
  });
}

DedekindReal ded_pow_rat(const DedekindReal& x, const Rational& beta) {
  return DedekindReal::from_fn([x, beta](long s) -> Iv {
    bool positive_seen = false;
    for (int attempt = 0; attempt < 10; ++attempt) {
      const long t = s + 4 + 8 * attempt;
      const Iv iv = x.interval(t);
      if (iv.hi.sign() <= 0)
        fail(Errc::NonPositiveBase, "power of a certified nonpositive base");
      if (iv.lo.sign() <= 0) continue;  // cannot certify positivity yet
      positive_seen = true;
      Iv out;
      if (beta.sign() >= 0) {
        out.lo = pow_bound_lower(iv.lo, beta, t);
        out.hi = pow_bound_upper(iv.hi, beta, t);
      } else {
        out.lo = pow_bound_lower(iv.hi, beta, t);
        out.hi = pow_bound_upper(iv.lo, beta, t);
      }
      if (out.width() <= Rational::two_pow(-s)) return out;
    }
    if (!positive_seen)
      fail(Errc::NonPositiveBase,
           "power base positivity could not be certified");
    fail(Errc::Internal, "power interval failed to shrink");
  });
}

UpperReal upper_exp(const DedekindReal& x, const UpperReal& lambda) {
  return UpperReal::from_fn([x, lambda](long n) -> ExtRational {
    const Iv iv = x.interval(n);
    if (iv.hi < 1)
      fail(Errc::BaseBelowOne, "exponentiation base certified below 1");
    const Rational lo1 = std::max(iv.lo, Rational(1));
    const ExtRational lb = lambda.bound(n);
    if (lb.is_pos_inf())
      return iv.hi == 1 ? ExtRational(Rational(1)) : ExtRational::pos_inf();
    if (lb.is_neg_inf())
      return lo1 > 1 ? ExtRational(Rational::two_pow(-n))
                     : ExtRational(Rational(1));
    const Rational& c = lb.value();
    const Rational base = c.sign() >= 0 ? iv.hi : lo1;
    if (base == 1) return ExtRational(Rational(1));
    return ExtRational(pow_bound_upper(base, c, n));
  });
}

}  // namespace ostk::onesided
