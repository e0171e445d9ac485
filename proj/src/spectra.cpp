#include "ostk/spectra.hpp"

#include <set>

#include "ostk/error.hpp"
#include "ostk/numtheory.hpp"

namespace ostk::spectra {

using absval::AbsValue;
using absval::av_eval;
using absval::CheckReport;
using absval::Verdict;
using arith::BigInt;
using arith::ExtRational;
using arith::Rational;

PrimeIdealZ PrimeIdealZ::zero_candidate() { return PrimeIdealZ{}; }

PrimeIdealZ PrimeIdealZ::principal_of(const BigInt& p) {
  PrimeIdealZ ideal;
  if (!arith::is_prime(p, &ideal.primality_trail))
    fail(Errc::NotPrime, "generator must be prime, got " + p.str());
  ideal.principal = true;
  ideal.p = p;
  return ideal;
}

std::string PrimeIdealZ::str() const {
  return principal ? p.str() : "0-candidate";
}

std::pair<PrimeIdealZ, IdealEvidence> detect_ideal(const AbsValue& av,
                                                   long budget, long stage) {
  if (budget < 2) fail(Errc::BadParameter, "budget must be at least 2");
  IdealEvidence ev;
  BigInt g(0);
  for (long n = 2; n <= budget; ++n) {
    const BigInt nn(n);
    const ExtRational b = av_eval(av, nn, stage);
    if (b.is_neg_inf() || (b.is_finite() && b.value().sign() < 0))
      fail(Errc::NegativeBound, "negative bound for |" + nn.str() + "|");
    if (b.is_finite() && b.value() < Rational(1)) {
      ev.witnesses.push_back(IdealWitness{nn, stage, b.value()});
      g = BigInt::gcd(g, nn);
      ev.gcd_trace.push_back(g);
    }
  }
  if (ev.witnesses.empty()) return {PrimeIdealZ::zero_candidate(), ev};
  if (g.is_one())
    fail(Errc::InconsistentOracle,
         "witnesses with gcd 1 cannot lie in one prime ideal");
  if (arith::is_prime(g)) return {PrimeIdealZ::principal_of(g), ev};
  for (const arith::FactorPair& fp : arith::factorize(g)) {
    const ExtRational b = av_eval(av, fp.p, stage);
    if (b.is_finite() && b.value() < Rational(1))
      return {PrimeIdealZ::principal_of(fp.p), ev};
  }
  return {PrimeIdealZ::zero_candidate(), ev};
}

bool ideal_member(const PrimeIdealZ& ideal, const BigInt& n) {
  if (!ideal.principal) return n.is_zero();
  return n.divisible_by(ideal.p);
}

ExtractResult extract_prime(const std::vector<BigInt>& elements) {
  if (elements.empty())
    fail(Errc::BadParameter, "need at least one element");
  BigInt g(0);
  for (const BigInt& e : elements) {
    if (e.is_zero()) fail(Errc::ZeroInput, "elements must be nonzero");
    g = BigInt::gcd(g, e);
  }
  if (g.is_one()) return ExtractContradiction{};
  const arith::Factorization f = arith::factorize(g);
  if (f.size() == 1) return PrimeIdealZ::principal_of(f.front().p);
  ExtractAmbiguous amb;
  for (const arith::FactorPair& fp : f) amb.candidates.push_back(fp.p);
  return amb;
}

CheckReport check_subtractive_ideal(const std::vector<BigInt>& S,
                                    long window_max) {
  if (window_max < 1)
    fail(Errc::BadParameter, "window must reach at least 1");
  std::set<BigInt> members;
  for (const BigInt& s : S) {
    if (s < 1 || s > BigInt(window_max))
      fail(Errc::BadParameter,
           "set element " + s.str() + " outside [1, window]");
    members.insert(s);
  }
  CheckReport rep;
  rep.property = "subtractive-ideal";
  rep.window = absval::Window{1, window_max};
  rep.stage = 0;

  for (const BigInt& m : members) {
    for (const BigInt& sum : members) {
      if (sum <= m) continue;
      const BigInt n = sum - m;
      if (members.count(n) == 0) {
        rep.verdict = Verdict::FailWitness;
        rep.m = m;
        rep.n = n;
        rep.detail = m.str() + " and " + sum.str() +
                     " lie in S but their difference " + n.str() + " does not";
        return rep;
      }
    }
  }
  for (const BigInt& m : members) {
    for (BigInt km = m + m; km <= BigInt(window_max); km += m) {
      if (members.count(km) == 0) {
        rep.verdict = Verdict::FailWitness;
        rep.m = m;
        rep.n = km;
        rep.detail = m.str() + " lies in S but its multiple " + km.str() +
                     " inside the window does not";
        return rep;
      }
    }
  }
  rep.detail = "checked " + std::to_string(members.size()) +
               " members for subtraction and multiple closure";
  return rep;
}

}  // namespace ostk::spectra
