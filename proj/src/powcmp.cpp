#include "ostk/powcmp.hpp"

#include <algorithm>
#include <utility>

#include "ostk/error.hpp"

namespace ostk::arith {

namespace {

// Cost ceiling (in bits of the fully multiplied-out result) below which a
// power is simply computed.  Beyond it the exact layers fall back to
// structural or interval reasoning.
constexpr unsigned long long kExactBits = 1ull << 20;

BigInt shr_ceil(const BigInt& v, unsigned long bits) {
  return (v + BigInt::two_pow(bits) - BigInt(1)).shr_floor(bits);
}

// ceil(sqrt(v)) for v >= 0.
BigInt sqrt_ceil(const BigInt& v) {
  BigInt r = v.sqrt_floor();
  if (r * r != v) r += BigInt(1);
  return r;
}

// Smallest L >= 0 with |e| <= 2^L (0 for |e| <= 1).  Used to budget how much
// accuracy a log enclosure must carry before being scaled by e.
long magnitude_bits(const Rational& e) {
  if (e.is_zero()) return 0;
  long d = static_cast<long>(e.num().bit_length()) -
           static_cast<long>(e.den().bit_length()) + 1;
  return std::max(0L, d);
}

QInterval scal_mul(const Rational& e, const QInterval& iv) {
  if (e.sign() >= 0) return QInterval{e * iv.lo, e * iv.hi};
  return QInterval{e * iv.hi, e * iv.lo};
}

// Enclosure of e * log2(base), with width <= 2^-k.
QInterval exp_log_interval(const Rational& base, const Rational& e, long k) {
  return scal_mul(e, log2_enclosure(base, k + magnitude_bits(e) + 1));
}

// Exact k-th root of a >= 1 when it exists.  A root t >= 2 forces 2^k <= a,
// so any k at or beyond the bit length can only fit a == 1; that keeps huge
// exponents (which arise from cross-multiplied dyadic exponents) cheap.
std::optional<BigInt> nth_root_exact(const BigInt& a, const BigInt& k) {
  if (a.sign() <= 0) fail(Errc::BadParameter, "nth_root_exact needs a >= 1");
  if (k < 1) fail(Errc::BadParameter, "nth_root_exact needs k >= 1");
  if (a.is_one()) return BigInt(1);
  if (k == 1) return a;
  if (k >= static_cast<long>(a.bit_length())) return std::nullopt;
  bool exact = false;
  BigInt r = a.root_floor(k.to_ulong(), &exact);
  if (!exact) return std::nullopt;
  return r;
}

// Which side of 1 the value base^exp lies on: -1, 0 or +1.
int side_of_one(const PowTerm& t) {
  if (t.base.sign() <= 0) fail(Errc::NonPositiveBase, "power term base <= 0");
  auto c = t.base <=> 1;
  if (c == 0 || t.exp.is_zero()) return 0;
  int sb = c < 0 ? -1 : 1;
  return sb * t.exp.sign();
}

// Decides r^P == s^U exactly for positive rationals r, s != 1 and nonzero
// integers P, U.  After normalizing both bases above 1 and both exponents
// positive, divide out g = gcd(P, U); with P1, U1 coprime, unique
// factorization gives r^P1 == s^U1 iff both bases are integer powers of a
// common rational t (t = r^(1/U1) = s^(1/P1), and Bezout shows t is itself
// rational when the equality holds).
bool equal_pow(Rational r, BigInt P, Rational s, BigInt U) {
  if (r < 1) {
    r = r.reciprocal();
    P = -P;
  }
  if (s < 1) {
    s = s.reciprocal();
    U = -U;
  }
  if (P.sign() != U.sign()) return false;
  if (P.sign() < 0) {
    P = -P;
    U = -U;
  }
  BigInt g = BigInt::gcd(P, U);
  BigInt P1 = P / g;
  BigInt U1 = U / g;
  auto t1 = rational_root_exact(r, U1);
  if (!t1) return false;
  auto t2 = rational_root_exact(s, P1);
  if (!t2) return false;
  return *t1 == *t2;
}

// Exact value of r^e when it is rational and small enough to write down.
std::optional<Rational> try_exact_pow(const Rational& r, const Rational& e) {
  if (e.is_zero() || r == 1) return Rational(1);
  Rational root = r;
  if (!e.is_integer()) {
    auto rt = rational_root_exact(r, e.den());
    if (!rt) return std::nullopt;
    root = *rt;
  }
  const BigInt pabs = e.num().abs();
  if (pabs > static_cast<long>(kExactBits)) return std::nullopt;
  const unsigned long long mag = pabs.to_ulong();
  const unsigned long long h = root.height_bits();
  if (h > kExactBits || mag * h > kExactBits) return std::nullopt;
  return root.pow_int(e.num().to_long());
}

// Lower/upper bounds on 2^f for rational f in [0, 1), with relative error at
// most 2^-t.  Built from t+4 binary digits of f and a chain of directed
// integer square roots of 2 at t+16 fixed-point fraction bits.
Rational pow2_frac_dir(const Rational& f, long t, bool upper) {
  if (f.sign() < 0 || f >= 1) fail(Errc::Internal, "pow2_frac domain");
  if (f.is_zero()) return Rational(1);
  if (t < 1) t = 1;
  const long G = t + 4;
  const unsigned long FP = static_cast<unsigned long>(t + 16);
  BigInt Dm = (f * Rational::two_pow(G)).floor();
  std::vector<bool> bits(static_cast<std::size_t>(G), false);
  {
    BigInt tmp = Dm;
    for (long i = 0; i < G && !tmp.is_zero(); ++i) {
      bits[static_cast<std::size_t>(i)] = !tmp.even();
      tmp = tmp.shr_floor(1);
    }
  }
  const BigInt one_fp = BigInt::two_pow(FP);
  const BigInt mask = one_fp - BigInt(1);
  BigInt w = BigInt::two_pow(FP + 1);  // running 2^(2^-j), starting at 2
  BigInt prod = one_fp;                // running product, starts at 1
  for (long j = 1; j <= G; ++j) {
    BigInt sq = w.shl(FP);
    w = upper ? sqrt_ceil(sq) : sq.sqrt_floor();
    if (bits[static_cast<std::size_t>(G - j)]) {
      BigInt raw = prod * w;
      prod = upper ? (raw + mask).shr_floor(FP) : raw.shr_floor(FP);
    }
  }
  Rational base = Rational(prod) * Rational::two_pow(-static_cast<long>(FP));
  if (!upper) return base;
  // Cover the truncated digit tail: 2^delta <= 1 + 2^-G for delta < 2^-G.
  return base * (Rational(1) + Rational::two_pow(-G));
}

struct BoundPlan {
  long t;  // relative accuracy target 2^-t
  long kL;  // log-enclosure accuracy for the final pass
};

// Accuracy needed so that a directed bound on r^e lands within 2^-s of the
// value in both absolute and relative terms.  The absolute half costs extra
// bits proportional to the value's binary magnitude, which a coarse
// enclosure pins down first.
BoundPlan plan_pow_bound(const Rational& r, const Rational& e, long s) {
  QInterval coarse = exp_log_interval(r, e, 4);
  BigInt ihi = coarse.hi.floor();
  if (!ihi.fits_long() || ihi > (1L << 16) || ihi < -(1L << 16))
    fail(Errc::Internal, "power magnitude outside the supported window");
  long i0 = ihi.to_long();
  long t = s + std::max(0L, i0 + 2) + 6;
  return BoundPlan{t, t + 6};
}

Rational pow_bound_dir(const Rational& r, const Rational& e, long s,
                       bool upper) {
  if (r.sign() <= 0) fail(Errc::NonPositiveBase, "power base <= 0");
  if (s < 0) s = 0;
  if (auto exact = try_exact_pow(r, e)) return *exact;
  BoundPlan plan = plan_pow_bound(r, e, s);
  QInterval L = exp_log_interval(r, e, plan.kL);
  const Rational& edge = upper ? L.hi : L.lo;
  BigInt ib = edge.floor();
  if (!ib.fits_long() || ib > (1L << 17) || ib < -(1L << 17))
    fail(Errc::Internal, "power magnitude outside the supported window");
  Rational f = edge - Rational(ib);
  Rational frac = pow2_frac_dir(f, plan.t, upper);
  return Rational::two_pow(ib.to_long()) * frac;
}

}  // namespace

const char* order_name(Order o) {
  switch (o) {
    case Order::Less:
      return "less";
    case Order::Equal:
      return "equal";
    case Order::Greater:
      return "greater";
  }
  return "?";
}

Order cmp_two_pow(const Rational& x, long e) {
  BigInt lhs = x.num();
  BigInt rhs = x.den();
  if (e >= 0)
    rhs = rhs.shl(static_cast<unsigned long>(e));
  else
    lhs = lhs.shl(static_cast<unsigned long>(-e));
  auto c = lhs <=> rhs;
  return c < 0 ? Order::Less : c == 0 ? Order::Equal : Order::Greater;
}

long floor_log2(const Rational& x) {
  if (x.sign() <= 0) fail(Errc::NonPositiveBase, "floor_log2 of " + x.str());
  long e = static_cast<long>(x.num().bit_length()) -
           static_cast<long>(x.den().bit_length());
  while (cmp_two_pow(x, e) == Order::Less) --e;
  while (cmp_two_pow(x, e + 1) != Order::Less) ++e;
  return e;
}

QInterval log2_enclosure(const Rational& x, long k) {
  if (x.sign() <= 0) fail(Errc::NonPositiveBase, "log2 of " + x.str());
  if (k < 0) k = 0;
  if (k > (1L << 20)) fail(Errc::BadParameter, "log2 accuracy out of range");
  const long E = floor_log2(x);
  const Rational y = x * Rational::two_pow(-E);  // in [1, 2)
  if (y == 1) return QInterval{Rational(E), Rational(E)};
  const long digits = k + 1;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const unsigned long F =
        static_cast<unsigned long>(3 * digits + 64) << attempt;
    // Directed fixed-point mantissas around y, F fraction bits.
    BigInt lo, rem;
    BigInt::divmod(y.num().shl(F), y.den(), lo, rem);
    BigInt hi = rem.is_zero() ? lo : lo + BigInt(1);
    const BigInt two_fp = BigInt::two_pow(F + 1);
    const BigInt mask = BigInt::two_pow(F) - BigInt(1);
    BigInt digits_acc(0);
    bool decided = true;
    // Binary digits of log2 y by repeated squaring: square the enclosure,
    // halve when it certifies >= 2.  Emitted digits are digits of the true
    // value; only decidability depends on the working precision.
    for (long j = 0; j < digits; ++j) {
      lo = (lo * lo).shr_floor(F);
      hi = ((hi * hi) + mask).shr_floor(F);
      if (lo >= two_fp) {
        digits_acc = digits_acc.shl(1) + BigInt(1);
        lo = lo.shr_floor(1);
        hi = shr_ceil(hi, 1);
      } else if (hi < two_fp) {
        digits_acc = digits_acc.shl(1);
      } else {
        decided = false;
        break;
      }
    }
    if (!decided) continue;
    Rational base = Rational(E) + Rational::dyadic(digits_acc, -digits);
    return QInterval{base, base + Rational::two_pow(-digits)};
  }
  fail(Errc::Internal, "log2 digit extraction stalled for " + x.str());
}

std::optional<Rational> rational_root_exact(const Rational& r,
                                            const BigInt& k) {
  if (k < 1) fail(Errc::BadParameter, "root index must be >= 1");
  if (r.sign() <= 0) fail(Errc::NonPositiveBase, "root of " + r.str());
  if (k == 1) return r;
  auto rn = nth_root_exact(r.num(), k);
  if (!rn) return std::nullopt;
  auto rd = nth_root_exact(r.den(), k);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

std::pair<BigInt, unsigned long> square_free_exponent_part(const BigInt& m) {
  if (m < 2) fail(Errc::BadBase, "needs an integer >= 2, got " + m.str());
  BigInt c = m;
  unsigned long j = 0;
  for (;;) {
    bool exact = false;
    BigInt rt = c.root_floor(2, &exact);
    if (!exact || rt < 2) return {c, j};
    c = rt;
    ++j;
  }
}

std::optional<BigInt> dyadic_log_exact(const BigInt& m, const Rational& q,
                                       unsigned long n) {
  if (m < 2) fail(Errc::BadBase, "log base must be >= 2, got " + m.str());
  if (q.sign() <= 0) fail(Errc::NonPositiveBase, "log of " + q.str());
  if (q == 1) return BigInt(0);
  // m^(k/2^n) is an integer for k > 0 and a unit fraction for k < 0, so
  // anything else misses immediately.
  bool negated = false;
  BigInt Q;
  if (q.is_integer()) {
    Q = q.num();
  } else if (q.num().is_one()) {
    Q = q.den();
    negated = true;
  } else {
    return std::nullopt;
  }
  // Write m = c^(2^j) with c not a perfect square.  If Q^(2^n) == m^k then
  // unique factorization puts Q and c on a common primitive base W with
  // Q = W^a, c = W^b and a*2^n = b*k*2^j; b is odd (else c were a square),
  // so b divides a and Q is a plain integer power of c.
  auto [c, j] = square_free_exponent_part(m);
  BigInt pw = c;
  BigInt kk(1);
  while (pw < Q) {
    pw *= c;
    kk += BigInt(1);
  }
  if (pw != Q) return std::nullopt;
  BigInt k;
  if (n >= j) {
    k = kk.shl(n - j);
  } else {
    const unsigned long d = j - n;
    BigInt quo, rem;
    BigInt::divmod(kk, BigInt::two_pow(d), quo, rem);
    if (!rem.is_zero()) return std::nullopt;
    k = quo;
  }
  return negated ? -k : k;
}

BigInt log_ceil_dyadic(const BigInt& m, const Rational& q, unsigned long n) {
  if (auto hit = dyadic_log_exact(m, q, n)) return *hit;
  // The value 2^n * log_m q is now known not to be an integer, so a tight
  // enough enclosure pins its ceiling.
  const Rational scale = Rational::two_pow(static_cast<long>(n));
  for (long k = 16; k <= (1L << 14); k *= 2) {
    const long acc = k + static_cast<long>(n) + 8;
    QInterval lq = log2_enclosure(q, acc);
    QInterval lm = log2_enclosure(Rational(m), acc);
    if (lm.lo.sign() <= 0) fail(Errc::Internal, "log base enclosure dipped");
    Rational lo = std::min(lq.lo / lm.lo, lq.lo / lm.hi) * scale;
    Rational hi = std::max(lq.hi / lm.lo, lq.hi / lm.hi) * scale;
    BigInt cl = lo.ceil();
    BigInt ch = hi.ceil();
    if (cl == ch) return cl;
  }
  fail(Errc::Internal,
       "log ceiling refinement stalled for base " + m.str() + " at " +
           q.str());
}

Rational pow_bound_upper(const Rational& r, const Rational& e, long s) {
  return pow_bound_dir(r, e, s, true);
}

Rational pow_bound_lower(const Rational& r, const Rational& e, long s) {
  return pow_bound_dir(r, e, s, false);
}

std::optional<Rational> term_exact(const PowTerm& t) {
  if (t.base.sign() <= 0) fail(Errc::NonPositiveBase, "power term base <= 0");
  return try_exact_pow(t.base, t.exp);
}

Order cmp_terms(const PowTerm& a, const PowTerm& b) {
  const int sa = side_of_one(a);
  const int sb = side_of_one(b);
  if (sa != sb) return sa < sb ? Order::Less : Order::Greater;
  if (sa == 0) return Order::Equal;
  // Raising both values to den(ea)*den(eb) > 0 preserves order and turns the
  // comparison into a.base^P vs b.base^U with integer exponents.
  const BigInt P = a.exp.num() * b.exp.den();
  const BigInt U = b.exp.num() * a.exp.den();
  const auto cheap = [](const BigInt& exp_abs, const Rational& base) {
    if (exp_abs > static_cast<long>(kExactBits)) return false;
    const unsigned long long h = base.height_bits();
    return h <= kExactBits && exp_abs.to_ulong() * h <= kExactBits;
  };
  if (cheap(P.abs(), a.base) && cheap(U.abs(), b.base))
    return cmp(a.base.pow_int(P.to_long()), b.base.pow_int(U.to_long()));
  if (equal_pow(a.base, P, b.base, U)) return Order::Equal;
  // Strictly ordered from here on, so log enclosures eventually separate.
  for (long k = 32; k <= (1L << 14); k *= 2) {
    QInterval ia = exp_log_interval(a.base, a.exp, k);
    QInterval ib = exp_log_interval(b.base, b.exp, k);
    if (ia.hi < ib.lo) return Order::Less;
    if (ib.hi < ia.lo) return Order::Greater;
  }
  fail(Errc::Internal, "power comparison refinement stalled");
}

Order cmp_pow_sum(const Term& a, const Term& b, const Term& c) {
  const bool an = !a.has_value();
  const bool bn = !b.has_value();
  const bool cn = !c.has_value();
  if (an) return (bn && cn) ? Order::Equal : Order::Less;
  if (bn && cn) return Order::Greater;
  if (bn || cn) return cmp_terms(*a, bn ? *c : *b);
  const auto ea = term_exact(*a);
  const auto eb = term_exact(*b);
  const auto ec = term_exact(*c);
  if (ea && eb && ec) return cmp(*ea, *eb + *ec);
  for (long s = 16; s <= (1L << 12); s *= 2) {
    const Rational al = ea ? *ea : pow_bound_lower(a->base, a->exp, s);
    const Rational ah = ea ? *ea : pow_bound_upper(a->base, a->exp, s);
    const Rational bl = eb ? *eb : pow_bound_lower(b->base, b->exp, s);
    const Rational bh = eb ? *eb : pow_bound_upper(b->base, b->exp, s);
    const Rational cl = ec ? *ec : pow_bound_lower(c->base, c->exp, s);
    const Rational ch = ec ? *ec : pow_bound_upper(c->base, c->exp, s);
    if (ah < bl + cl) return Order::Less;
    if (al > bh + ch) return Order::Greater;
  }
  fail(Errc::Internal, "sum comparison refinement stalled");
}

}  // namespace ostk::arith
