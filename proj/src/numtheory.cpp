#include "ostk/numtheory.hpp"

#include <mutex>

#include "ostk/error.hpp"

namespace ostk::arith {

BezoutTriple gcd_bezout(const BigInt& a, const BigInt& b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd_bezout(0, 0)");
  // Iterative extended Euclid on magnitudes; sign-correct the coefficients
  // afterwards so a*x + b*y == g for the original signed inputs.
  BigInt r0 = a.abs(), r1 = b.abs();
  BigInt x0(1), x1(0), y0(0), y1(1);
  while (!r1.is_zero()) {
    BigInt q, r;
    BigInt::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    BigInt x2 = x0 - q * x1;
    x0 = x1;
    x1 = x2;
    BigInt y2 = y0 - q * y1;
    y0 = y1;
    y1 = y2;
  }
  BigInt x = a.sign() < 0 ? -x0 : x0;
  BigInt y = b.sign() < 0 ? -y0 : y0;
  return BezoutTriple{r0, x, y};
}

bool is_prime(const BigInt& n, std::vector<BigInt>* trail) {
  if (trail) trail->clear();
  if (n < 2) return false;
  for (long small : {2L, 3L}) {
    BigInt d(small);
    if (n == d) return true;
    if (trail) trail->push_back(d);
    if (n.divisible_by(d)) return false;
  }
  // 6k +/- 1 wheel up to sqrt n.
  const BigInt root = n.sqrt_floor();
  BigInt d(5);
  while (d <= root) {
    if (trail) trail->push_back(d);
    if (n.divisible_by(d)) return false;
    BigInt d2 = d + BigInt(2);
    if (d2 > root) break;
    if (trail) trail->push_back(d2);
    if (n.divisible_by(d2)) return false;
    d += BigInt(6);
  }
  return true;
}

Factorization factorize(const BigInt& n) {
  if (n.is_zero()) fail(Errc::ZeroInput, "factorize(0)");
  Factorization out;
  BigInt m = n.abs();
  auto strip = [&](const BigInt& p) {
    unsigned long e = 0;
    while (m.divisible_by(p)) {
      m = m / p;
      ++e;
    }
    if (e > 0) out.push_back(FactorPair{p, e});
  };
  strip(BigInt(2));
  strip(BigInt(3));
  BigInt d(5);
  while (d * d <= m) {
    strip(d);
    strip(d + BigInt(2));
    d += BigInt(6);
  }
  if (m > 1) out.push_back(FactorPair{m, 1});
  return out;
}

unsigned long ord_p_unchecked(const BigInt& p, const BigInt& n) {
  unsigned long e = 0;
  BigInt m = n.abs();
  while (m.divisible_by(p)) {
    m = m / p;
    ++e;
  }
  return e;
}

unsigned long ord_p(const BigInt& p, const BigInt& n) {
  if (n.is_zero()) fail(Errc::ZeroInput, "ord_p at 0 (order is infinite)");
  if (!is_prime(p)) fail(Errc::NotPrime, p.str() + " is not prime");
  return ord_p_unchecked(p, n);
}

std::vector<BigInt> primes_upto(const BigInt& k) {
  if (k.sign() < 0) fail(Errc::BadParameter, "primes_upto(negative)");
  std::vector<BigInt> out;
  if (k < 2) return out;
  if (!k.fits_long())
    fail(Errc::BadParameter, "primes_upto bound too large: " + k.str());
  const unsigned long limit = static_cast<unsigned long>(k.to_long());
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  for (unsigned long i = 2; i <= limit; ++i)
    if (!composite[i]) out.emplace_back(static_cast<long>(i));
  return out;
}

namespace {
std::vector<BigInt>& prime_cache() {
  static std::vector<BigInt> cache = {BigInt(2), BigInt(3), BigInt(5)};
  return cache;
}
std::mutex& prime_cache_mu() {
  static std::mutex mu;
  return mu;
}
}  // namespace

BigInt prime_at(std::size_t i) {
  std::lock_guard<std::mutex> lock(prime_cache_mu());
  auto& cache = prime_cache();
  while (cache.size() <= i) {
    BigInt c = cache.back() + BigInt(2);
    while (!is_prime(c)) c += BigInt(2);
    cache.push_back(c);
  }
  return cache[i];
}

std::size_t prime_count_upto(unsigned long n) {
  std::size_t count = 0;
  for (std::size_t i = 0;; ++i) {
    if (prime_at(i) > static_cast<long>(n)) return count;
    ++count;
  }
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

}  // namespace ostk::arith
