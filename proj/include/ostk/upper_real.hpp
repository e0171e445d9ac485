#pragma once

// One-sided real numbers, represented computationally.
//
// An UpperReal is a stage-indexed stream of extended-rational upper bounds;
// its value is the infimum of the stream.  Nothing about a finite prefix of
// the stream reveals the value from below, which is exactly the information
// asymmetry this library trades in: "the value is at most b" is certifiable
// at a finite stage, "the value exceeds b" in general is not.
//
// Streams handed in through from_fn need not be monotone: bound(n) chains a
// running minimum over the raw stream, so published bounds are always
// antitone in the stage.  A LowerReal is the mirror image (isotone lower
// bounds, value = supremum).
//
// All operations are sound per stage: the stage-n output bound is a true
// upper bound of the exact result whenever the operand streams are sound.

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "ostk/bigint.hpp"
#include "ostk/rational.hpp"

namespace ostk::onesided {

using arith::BigInt;
using arith::ExtRational;
using arith::Rational;

class UpperReal {
 public:
  using Fn = std::function<ExtRational(long)>;

  UpperReal() : UpperReal(constant(ExtRational::pos_inf())) {}

  static UpperReal constant(const ExtRational& v);
  // The distinguished exact zero: all bounds are 0, and is_zero_token()
  // reports it, letting evaluators short-circuit 0 * infinity to 0.
  static UpperReal zero();
  static UpperReal one() { return constant(ExtRational(Rational(1))); }
  static UpperReal from_fn(Fn raw);

  // The running-minimum bound at the given stage (stages count from 0;
  // negative stages read as 0).
  ExtRational bound(long stage) const;

  bool is_zero_token() const;

 private:
  struct Impl {
    Fn raw;
    bool zero_token = false;
    std::vector<ExtRational> memo;
    std::mutex mu;
  };
  explicit UpperReal(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

class LowerReal {
 public:
  using Fn = std::function<ExtRational(long)>;

  LowerReal() : LowerReal(constant(ExtRational::neg_inf())) {}

  static LowerReal constant(const ExtRational& v);
  static LowerReal from_fn(Fn raw);

  // The running-maximum bound at the given stage.
  ExtRational bound(long stage) const;

 private:
  struct Impl {
    Fn raw;
    std::vector<ExtRational> memo;
    std::mutex mu;
  };
  explicit LowerReal(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Pointwise sum.  May raise Errc::IndeterminateInfinity if the operand
// bounds mix the two infinities at some stage.
UpperReal upper_add(const UpperReal& x, const UpperReal& y);

// Pointwise product for nonnegative upper reals.  A stage bound of 0
// certifies the value 0, so 0 * infinity = 0 here; a negative stage bound
// raises Errc::NegativeBound.
UpperReal upper_mul(const UpperReal& x, const UpperReal& y);

UpperReal upper_min(const UpperReal& x, const UpperReal& y);
UpperReal upper_max(const UpperReal& x, const UpperReal& y);

// Infimum of finitely many upper reals; of none is +infinity.
UpperReal upper_inf(const std::vector<UpperReal>& xs);

// Infimum of a countable family, explored on the diagonal schedule: the
// stage-n bound consults members 0..n at stage n.  Every member is
// eventually consulted at every depth, so the value is the infimum of the
// whole family even though no single stage sees all of it.
UpperReal upper_inf_scheduled(std::function<UpperReal(std::size_t)> member);

// Base-m logarithm of a nonnegative upper real, m >= 2 (Errc::BadBase).
// Stage n publishes a dyadic upper bound with accuracy 2^-n, restricted to
// the value window [-64n, 64n]:
//   - a value certifiably above the window cannot be soundly clamped down,
//     so the stage reports +infinity;
//   - below the window the edge -64n itself is a sound (if weak) bound;
//   - a stage bound of 0 certifies value 0, whose log is -infinity.
// Raises Errc::NegativeBound if a stage bound is negative.
UpperReal upper_log(const BigInt& m, const UpperReal& u);

}  // namespace ostk::onesided
