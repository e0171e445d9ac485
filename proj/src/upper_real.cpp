#include "ostk/upper_real.hpp"

#include <algorithm>

#include "ostk/error.hpp"
#include "ostk/powcmp.hpp"

namespace ostk::onesided {

using arith::floor_log2;
using arith::log_ceil_dyadic;

UpperReal UpperReal::constant(const ExtRational& v) {
  auto impl = std::make_shared<Impl>();
  impl->raw = [v](long) { return v; };
  impl->zero_token = v.is_finite() && v.value().is_zero();
  return UpperReal(std::move(impl));
}

UpperReal UpperReal::zero() { return constant(ExtRational(Rational(0))); }

UpperReal UpperReal::from_fn(Fn raw) {
  auto impl = std::make_shared<Impl>();
  impl->raw = std::move(raw);
  return UpperReal(std::move(impl));
}

ExtRational UpperReal::bound(long stage) const {
  if (stage < 0) stage = 0;
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& memo = impl_->memo;
  while (static_cast<long>(memo.size()) <= stage) {
    const long n = static_cast<long>(memo.size());
    ExtRational b = impl_->raw(n);
    if (n > 0) b = ExtRational::min(b, memo.back());
    memo.push_back(b);
  }
  return memo[static_cast<std::size_t>(stage)];
}

bool UpperReal::is_zero_token() const { return impl_->zero_token; }

LowerReal LowerReal::constant(const ExtRational& v) {
  auto impl = std::make_shared<Impl>();
  impl->raw = [v](long) { return v; };
  return LowerReal(std::move(impl));
}

LowerReal LowerReal::from_fn(Fn raw) {
  auto impl = std::make_shared<Impl>();
  impl->raw = std::move(raw);
  return LowerReal(std::move(impl));
}

ExtRational LowerReal::bound(long stage) const {
  if (stage < 0) stage = 0;
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& memo = impl_->memo;
  while (static_cast<long>(memo.size()) <= stage) {
    const long n = static_cast<long>(memo.size());
    ExtRational b = impl_->raw(n);
    if (n > 0) b = ExtRational::max(b, memo.back());
    memo.push_back(b);
  }
  return memo[static_cast<std::size_t>(stage)];
}

UpperReal upper_add(const UpperReal& x, const UpperReal& y) {
  return UpperReal::from_fn(
      [x, y](long n) { return x.bound(n) + y.bound(n); });
}

namespace {

// Stage rule for nonnegative products: 0 certifies 0 and annihilates even
// +infinity; otherwise infinities dominate.
ExtRational mul_bounds(const ExtRational& a, const ExtRational& b) {
  for (const ExtRational* v : {&a, &b})
    if (v->is_neg_inf() || (v->is_finite() && v->value().sign() < 0))
      fail(Errc::NegativeBound,
           "product over nonnegative streams saw bound " + v->str());
  if ((a.is_finite() && a.value().is_zero()) ||
      (b.is_finite() && b.value().is_zero()))
    return ExtRational(Rational(0));
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtRational::pos_inf();
  return ExtRational(a.value() * b.value());
}

}  // namespace

UpperReal upper_mul(const UpperReal& x, const UpperReal& y) {
  if (x.is_zero_token() || y.is_zero_token()) return UpperReal::zero();
  return UpperReal::from_fn(
      [x, y](long n) { return mul_bounds(x.bound(n), y.bound(n)); });
}

UpperReal upper_min(const UpperReal& x, const UpperReal& y) {
  return UpperReal::from_fn(
      [x, y](long n) { return ExtRational::min(x.bound(n), y.bound(n)); });
}

UpperReal upper_max(const UpperReal& x, const UpperReal& y) {
  return UpperReal::from_fn(
      [x, y](long n) { return ExtRational::max(x.bound(n), y.bound(n)); });
}

UpperReal upper_inf(const std::vector<UpperReal>& xs) {
  if (xs.empty()) return UpperReal::constant(ExtRational::pos_inf());
  return UpperReal::from_fn([xs](long n) {
    ExtRational b = xs.front().bound(n);
    for (std::size_t i = 1; i < xs.size(); ++i)
      b = ExtRational::min(b, xs[i].bound(n));
    return b;
  });
}

UpperReal upper_inf_scheduled(std::function<UpperReal(std::size_t)> member) {
  struct Family {
    std::function<UpperReal(std::size_t)> make;
    std::vector<UpperReal> cache;
    std::mutex mu;
  };
  auto fam = std::make_shared<Family>();
  fam->make = std::move(member);
  return UpperReal::from_fn([fam](long n) {
    std::vector<UpperReal> view;
    {
      std::lock_guard<std::mutex> lock(fam->mu);
      while (fam->cache.size() <= static_cast<std::size_t>(n))
        fam->cache.push_back(fam->make(fam->cache.size()));
      view = fam->cache;
    }
    ExtRational b = view.front().bound(n);
    for (long i = 1; i <= n; ++i)
      b = ExtRational::min(b, view[static_cast<std::size_t>(i)].bound(n));
    return b;
  });
}

namespace {

// Cheap two-sided rational bracket of log_m q from bit lengths alone, used
// to dodge expensive exact work far outside the stage window.
void coarse_log_bracket(const BigInt& m, const Rational& q, Rational* lo,
                        Rational* hi) {
  const long e = floor_log2(q);
  const long lm = static_cast<long>(m.bit_length()) - 1;  // >= 1
  const Rational c1{BigInt(e), BigInt(lm)};
  const Rational c2{BigInt(e), BigInt(lm + 1)};
  const Rational c3{BigInt(e + 1), BigInt(lm)};
  const Rational c4{BigInt(e + 1), BigInt(lm + 1)};
  *lo = std::min(std::min(c1, c2), std::min(c3, c4));
  *hi = std::max(std::max(c1, c2), std::max(c3, c4));
}

ExtRational log_stage(const BigInt& m, const UpperReal& u, long n) {
  const ExtRational b = u.bound(n);
  if (b.is_pos_inf()) return b;
  if (b.is_neg_inf() || b.value().sign() < 0)
    fail(Errc::NegativeBound, "log over a stream with bound " + b.str());
  const Rational& q = b.value();
  if (q.is_zero()) return ExtRational::neg_inf();
  const Rational win(64 * n);
  Rational clo, chi;
  coarse_log_bracket(m, q, &clo, &chi);
  if (clo > win) return ExtRational::pos_inf();
  if (chi < -win) return ExtRational(-win);
  const BigInt t = log_ceil_dyadic(m, q, static_cast<unsigned long>(n));
  const Rational val = Rational::dyadic(t, -n);
  if (val > win) return ExtRational::pos_inf();
  if (val < -win) return ExtRational(-win);
  return ExtRational(val);
}

}  // namespace

UpperReal upper_log(const BigInt& m, const UpperReal& u) {
  if (m < 2) fail(Errc::BadBase, "log base must be >= 2, got " + m.str());
  return UpperReal::from_fn([m, u](long n) { return log_stage(m, u, n); });
}

}  // namespace ostk::onesided
