#pragma once

// Two-sided (Dedekind) reals as shrinking rational intervals, plus the
// bridges between the two-sided and one-sided views.
//
// Stage n of a DedekindReal is a rational interval of width at most 2^-n
// containing the value.  Intervals are intersection-chained, so published
// stages are nested even when the raw stream is not; a raw stream that
// breaks the width contract or produces an empty intersection is a bug and
// raises Errc::Internal.

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "ostk/rational.hpp"
#include "ostk/upper_real.hpp"

namespace ostk::onesided {

struct Iv {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

class DedekindReal {
 public:
  using Fn = std::function<Iv(long)>;

  DedekindReal() : DedekindReal(constant(Rational(0))) {}

  static DedekindReal constant(const Rational& v);
  static DedekindReal from_fn(Fn raw);

  Iv interval(long stage) const;

  // One-sided projections: the stream of right endpoints (an upper real)
  // and of left endpoints (a lower real).
  UpperReal upper() const;
  LowerReal lower() const;

 private:
  struct Impl {
    Fn raw;
    std::vector<Iv> memo;
    std::mutex mu;
  };
  explicit DedekindReal(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Product of two Dedekind reals.
DedekindReal ded_mul(const DedekindReal& a, const DedekindReal& b);

// x^beta for a strictly positive Dedekind real x and rational beta.
// Raises Errc::NonPositiveBase if x is certified nonpositive (and treats a
// base whose positivity can never be certified the same way).
DedekindReal ded_pow_rat(const DedekindReal& x, const Rational& beta);

// x^lambda for a Dedekind real x >= 1 and a one-sided exponent,
// as an upper real.  For x >= 1 the map is isotone in the exponent, so an
// upper bound on lambda yields an upper bound on x^lambda; stage n combines
// the stage-n views of both operands at accuracy 2^-n.  A base certified
// below 1 raises Errc::BaseBelowOne; a base that is merely possibly below 1
// is clamped up to 1, which is sound only under the documented domain
// x >= 1.
UpperReal upper_exp(const DedekindReal& x, const UpperReal& lambda);

}  // namespace ostk::onesided
