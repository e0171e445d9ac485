#include <string>
#include <vector>

#include "doctest.h"
#include "ostk/absvalue.hpp"
#include "ostk/error.hpp"
#include "ostk/numtheory.hpp"
#include "test_util.hpp"

using namespace ostk;
using namespace ostk::arith;
using namespace ostk::absval;
using onesided::DedekindReal;
using onesided::Iv;
using onesided::UpperReal;

namespace {
Rational Q(const std::string& s) { return Rational::parse(s); }
ExtRational fin(const std::string& s) { return ExtRational(Q(s)); }

AbsValue corrupt_euclid() {
  // Claims the euclidean closed form but answers |2| = 3.
  return AbsValue::custom(
      "corrupt-euclid",
      [](const BigInt& m) {
        return UpperReal::constant(
            ExtRational(m == 2 ? Rational(3) : Rational(m)));
      },
      ClosedForm::euclid());
}
}  // namespace

TEST_CASE("closed form factories validate their parameters") {
  CHECK(thrown_code([] { ClosedForm::padic(BigInt(4)); }) ==
        Errc::BadParameter);
  CHECK(thrown_code([] { ClosedForm::padic(BigInt(1)); }) ==
        Errc::BadParameter);
  CHECK(thrown_code([] { ClosedForm::pchar(BigInt(-3)); }) ==
        Errc::BadParameter);
  CHECK(thrown_code([] { ClosedForm::power_euclid(Q("3/2")); }) ==
        Errc::BadParameter);
  CHECK(thrown_code([] { ClosedForm::power_euclid(Q("-1/3")); }) ==
        Errc::BadParameter);
  CHECK(thrown_code([] {
          ClosedForm::power_padic(BigInt(5), fin("1/2"));
        }) == Errc::BadParameter);
  CHECK(thrown_code([] {
          ClosedForm::power_padic(BigInt(5), ExtRational::pos_inf());
        }) == Errc::BadParameter);
  CHECK(thrown_code([] {
          ClosedForm::power_padic(BigInt(4), fin("-1"));
        }) == Errc::BadParameter);

  CHECK(ClosedForm::trivial().canonical_lambda() == fin("0"));
  CHECK(ClosedForm::euclid().canonical_lambda() == fin("1"));
  CHECK(ClosedForm::padic(BigInt(7)).canonical_lambda() == fin("-1"));
  CHECK(ClosedForm::pchar(BigInt(2)).canonical_lambda() ==
        ExtRational::neg_inf());
  CHECK(ClosedForm::power_euclid(Q("1/3")).canonical_lambda() == fin("1/3"));
  CHECK(ClosedForm::power_padic(BigInt(3), fin("-7/2")).canonical_lambda() ==
        fin("-7/2"));

  CHECK(!ClosedForm::trivial().non_archimedean());
  CHECK(!ClosedForm::euclid().non_archimedean());
  CHECK(!ClosedForm::power_euclid(Q("1/2")).non_archimedean());
  CHECK(ClosedForm::padic(BigInt(3)).non_archimedean());
  CHECK(ClosedForm::pchar(BigInt(3)).non_archimedean());
  CHECK(ClosedForm::power_padic(BigInt(3), fin("-1/2")).non_archimedean());
  CHECK(!ClosedForm::power_padic(BigInt(3), fin("0")).non_archimedean());

  CHECK(ClosedForm::padic(BigInt(5)).prime_indexed());
  CHECK(!ClosedForm::euclid().prime_indexed());

  CHECK(ClosedForm::trivial().str() == "trivial");
  CHECK(ClosedForm::padic(BigInt(3)).str() == "padic(3)");
  CHECK(ClosedForm::pchar(BigInt(2)).str() == "pchar(2)");
  CHECK(ClosedForm::power_euclid(Q("1/3")).str() == "power(euclid,1/3)");
  CHECK(ClosedForm::power_padic(BigInt(3), ExtRational::neg_inf()).str() ==
        "power(padic(3),-inf)");

  ClosedForm bad = ClosedForm::power_euclid(Q("1/2"));
  bad.lambda = fin("3/2");
  CHECK(thrown_code([&] { bad.validate(); }) == Errc::BadParameter);
}

TEST_CASE("closed form values") {
  auto exact = [](const Term& t) {
    REQUIRE(t.has_value());
    auto v = term_exact(*t);
    REQUIRE(v.has_value());
    return *v;
  };

  CHECK(exact(cf_value(ClosedForm::trivial(), BigInt(10))) == Rational(1));
  CHECK(!cf_value(ClosedForm::trivial(), BigInt(0)).has_value());
  CHECK(exact(cf_value(ClosedForm::euclid(), BigInt(-7))) == Rational(7));
  CHECK(exact(cf_value(ClosedForm::padic(BigInt(3)), BigInt(162))) ==
        Q("1/81"));
  CHECK(exact(cf_value(ClosedForm::padic(BigInt(5)), BigInt(7))) ==
        Rational(1));
  CHECK(!cf_value(ClosedForm::pchar(BigInt(2)), BigInt(6)).has_value());
  CHECK(exact(cf_value(ClosedForm::pchar(BigInt(2)), BigInt(5))) ==
        Rational(1));
  CHECK(exact(cf_value(ClosedForm::power_euclid(Q("1/2")), BigInt(9))) ==
        Rational(3));
  CHECK(exact(cf_value(ClosedForm::power_padic(BigInt(2), fin("-3")),
                       BigInt(8))) == Q("1/512"));
  CHECK(!cf_value(ClosedForm::power_padic(BigInt(3), ExtRational::neg_inf()),
                  BigInt(9))
             .has_value());
  CHECK(exact(cf_value(ClosedForm::power_padic(BigInt(3),
                                               ExtRational::neg_inf()),
                       BigInt(5))) == Rational(1));
  // Exponent zero collapses the power kinds to the trivial value.
  CHECK(exact(cf_value(ClosedForm::power_euclid(Q("0")), BigInt(17))) ==
        Rational(1));
  CHECK(exact(cf_value(ClosedForm::power_padic(BigInt(2), fin("0")),
                       BigInt(8))) == Rational(1));
  // Irrational values stay symbolic.
  const Term sq2 = cf_value(ClosedForm::power_euclid(Q("1/2")), BigInt(2));
  REQUIRE(sq2.has_value());
  CHECK(!term_exact(*sq2).has_value());
  CHECK(sq2->base == Rational(2));
  CHECK(sq2->exp == Q("1/2"));
}

TEST_CASE("term helpers") {
  const Term zero;
  const Term one = PowTerm{Rational(1), Rational(1)};
  const Term sq2 = PowTerm{Rational(2), Q("1/2")};
  const Term sq8 = PowTerm{Rational(8), Q("1/2")};

  CHECK(cmp_term_term(zero, zero) == Order::Equal);
  CHECK(cmp_term_term(zero, one) == Order::Less);
  CHECK(cmp_term_term(one, zero) == Order::Greater);
  CHECK(cmp_term_term(sq2, sq2) == Order::Equal);
  CHECK(cmp_term_term(sq2, one) == Order::Greater);

  CHECK(cmp_rat_term(Q("-1"), one) == Order::Less);
  CHECK(cmp_rat_term(Q("0"), zero) == Order::Equal);
  CHECK(cmp_rat_term(Q("1/2"), zero) == Order::Greater);
  CHECK(cmp_rat_term(Q("3/2"), sq2) == Order::Greater);  // 9/4 > 2
  CHECK(cmp_rat_term(Q("7/5"), sq2) == Order::Less);     // 49/25 < 2

  CHECK(!term_mul(zero, one).has_value());
  CHECK(!term_mul(sq2, zero).has_value());
  const Term u = term_mul(one, sq2);
  REQUIRE(u.has_value());
  CHECK(u->base == Rational(2));
  const Term merged = term_mul(sq2, sq8);
  REQUIRE(merged.has_value());
  CHECK(merged->base == Rational(16));
  CHECK(merged->exp == Q("1/2"));  // 16^(1/2) = 4 = sqrt(2)*sqrt(8)
  const Term exact_pair =
      term_mul(PowTerm{Rational(4), Q("1/2")}, PowTerm{Rational(9), Q("3")});
  REQUIRE(exact_pair.has_value());
  CHECK(term_exact(*exact_pair).value() == Rational(1458));
  CHECK(thrown_code([&] {
          term_mul(sq2, PowTerm{Rational(3), Q("1/3")});
        }) == Errc::Internal);
}

TEST_CASE("standard evaluators produce exact or converging bounds") {
  const AbsValue euclid = make_standard(ClosedForm::euclid());
  CHECK(av_eval(euclid, BigInt(-7), 0) == fin("7"));
  CHECK(av_eval(euclid, BigInt(-7), 33) == fin("7"));

  const AbsValue p5 = make_standard(ClosedForm::padic(BigInt(5)));
  CHECK(av_eval(p5, BigInt(5), 4) == fin("1/5"));
  CHECK(av_eval(p5, BigInt(50), 4) == fin("1/25"));
  CHECK(av_eval(p5, BigInt(7), 4) == fin("1"));

  const AbsValue triv = make_standard(ClosedForm::trivial());
  CHECK(av_eval(triv, BigInt(10), 2) == fin("1"));

  const AbsValue ch2 = make_standard(ClosedForm::pchar(BigInt(2)));
  CHECK(av_eval(ch2, BigInt(6), 3) == fin("0"));
  CHECK(av_eval(ch2, BigInt(5), 3) == fin("1"));
  CHECK(ch2.upper(BigInt(6)).is_zero_token());

  // |2| under the square-root twist: upper bound within 2^-20 of sqrt(2).
  const AbsValue rt = make_standard(ClosedForm::power_euclid(Q("1/2")));
  const ExtRational b = av_eval(rt, BigInt(2), 20);
  REQUIRE(b.is_finite());
  CHECK(b.value() * b.value() >= Rational(2));
  const Rational probe = b.value() - Rational::two_pow(-20);
  CHECK(probe * probe <= Rational(2));

  // Units and zero are pinned no matter what the evaluator claims.
  const AbsValue weird = AbsValue::custom("weird", [](const BigInt&) {
    return UpperReal::constant(fin("7"));
  });
  CHECK(av_eval(weird, BigInt(0), 5) == fin("0"));
  CHECK(weird.upper(BigInt(0)).is_zero_token());
  CHECK(av_eval(weird, BigInt(1), 5) == fin("1"));
  CHECK(av_eval(weird, BigInt(-1), 5) == fin("1"));
  CHECK(av_eval(weird, BigInt(-9), 5) == fin("7"));
  CHECK(weird.name() == "weird");
  CHECK(!weird.descriptor().has_value());

  // Sign invariance holds exactly for every standard kind.
  const std::vector<ClosedForm> kinds = {
      ClosedForm::trivial(),
      ClosedForm::euclid(),
      ClosedForm::padic(BigInt(3)),
      ClosedForm::pchar(BigInt(2)),
      ClosedForm::power_euclid(Q("1/3")),
      ClosedForm::power_padic(BigInt(2), fin("-1/2"))};
  for (const ClosedForm& cf : kinds) {
    const AbsValue av = make_standard(cf);
    for (long n : {2L, 6L, 17L, 31L}) {
      CHECK(av_eval(av, BigInt(n), 12) == av_eval(av, BigInt(-n), 12));
    }
  }
}

TEST_CASE("multiplicativity is exact on closed forms") {
  const std::vector<ClosedForm> kinds = {
      ClosedForm::trivial(),
      ClosedForm::euclid(),
      ClosedForm::padic(BigInt(3)),
      ClosedForm::pchar(BigInt(2)),
      ClosedForm::power_euclid(Q("1/2")),
      ClosedForm::power_padic(BigInt(2), fin("-1/2"))};
  SplitMix64 rng(42);
  for (const ClosedForm& cf : kinds) {
    for (int t = 0; t < 60; ++t) {
      const BigInt m(rng.range(-1000, 1000));
      const BigInt n(rng.range(-1000, 1000));
      const Term lhs = cf_value(cf, m * n);
      const Term rhs = term_mul(cf_value(cf, m), cf_value(cf, n));
      CHECK(cmp_term_term(lhs, rhs) == Order::Equal);
    }
  }
}

TEST_CASE("axiom checks pass on the standard kinds") {
  const Window w{-50, 50};
  CHECK(check_axioms(make_standard(ClosedForm::padic(BigInt(7))), w, 20, 200,
                     1)
            .verdict == Verdict::Pass);
  const CheckReport eu =
      check_axioms(make_standard(ClosedForm::euclid()), w, 20, 200, 1);
  CHECK(eu.verdict == Verdict::Pass);
  CHECK(eu.oracle_checked);
  CHECK(eu.oracle_agrees);
  CHECK(check_axioms(make_standard(ClosedForm::trivial()), w, 20, 100, 2)
            .verdict == Verdict::Pass);
  CHECK(check_axioms(make_standard(ClosedForm::pchar(BigInt(3))), w, 20, 100,
                     3)
            .verdict == Verdict::Pass);
  CHECK(check_axioms(make_standard(ClosedForm::power_euclid(Q("1/3"))), w, 20,
                     60, 7)
            .verdict == Verdict::Pass);
  CHECK(check_axioms(
            make_standard(ClosedForm::power_padic(BigInt(2), fin("-1/2"))), w,
            20, 60, 7)
            .verdict == Verdict::Pass);

  CHECK(thrown_code([] {
          check_axioms(make_standard(ClosedForm::euclid()), Window{3, 1}, 20,
                       10, 0);
        }) == Errc::BadParameter);
}

TEST_CASE("axiom check exposes an evaluator that betrays its descriptor") {
  const CheckReport rep = check_axioms(corrupt_euclid(), Window{-50, 50}, 20,
                                       50, 1);
  CHECK(rep.verdict == Verdict::FailWitness);
  CHECK(rep.oracle_checked);
  CHECK(!rep.oracle_agrees);
  CHECK(rep.detail.find("deviates") != std::string::npos);
}

TEST_CASE("axiom check on generic oracles cannot refute, only converge") {
  // Honest bounds with no descriptor: still Pass, marked tolerance-level.
  const AbsValue gen = AbsValue::custom("plain", [](const BigInt& m) {
    return UpperReal::constant(ExtRational(Rational(m)));
  });
  const CheckReport ok = check_axioms(gen, Window{-30, 30}, 20, 100, 4);
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(!ok.oracle_checked);

  // A slack generic oracle diverges from multiplicativity: Inconclusive.
  const AbsValue slack = AbsValue::custom("slack", [](const BigInt& m) {
    return UpperReal::constant(ExtRational(Rational(m * m * 2)));
  });
  const CheckReport inc = check_axioms(slack, Window{2, 9}, 20, 50, 5);
  CHECK(inc.verdict == Verdict::Inconclusive);
}

TEST_CASE("subtractive inequality and the sign equivalence") {
  CHECK(check_subtractive(make_standard(ClosedForm::padic(BigInt(2))),
                          Window{0, 60}, 20)
            .verdict == Verdict::Pass);
  const CheckReport eu = check_subtractive(make_standard(ClosedForm::euclid()),
                                           Window{0, 60}, 20);
  CHECK(eu.verdict == Verdict::Pass);
  CHECK(eu.detail.find("equivalence holds") != std::string::npos);
  CHECK(check_subtractive(make_standard(ClosedForm::pchar(BigInt(3))),
                          Window{0, 60}, 20)
            .verdict == Verdict::Pass);
  CHECK(check_subtractive(make_standard(ClosedForm::power_euclid(Q("1/3"))),
                          Window{0, 25}, 20)
            .verdict == Verdict::Pass);
  CHECK(check_subtractive(
            make_standard(ClosedForm::power_padic(BigInt(2), fin("-1/2"))),
            Window{0, 25}, 20)
            .verdict == Verdict::Pass);

  CHECK(thrown_code([] {
          check_subtractive(make_standard(ClosedForm::euclid()),
                            Window{-3, 10}, 20);
        }) == Errc::BadParameter);
  CHECK(thrown_code([] {
          check_subtractive(make_standard(ClosedForm::euclid()),
                            Window{0, 100000}, 20);
        }) == Errc::BadParameter);
}

TEST_CASE("ultrametric check separates the archimedean kinds") {
  CHECK(check_ultrametric(make_standard(ClosedForm::padic(BigInt(3))),
                          Window{-60, 60}, 20)
            .verdict == Verdict::Pass);
  CHECK(check_ultrametric(make_standard(ClosedForm::trivial()),
                          Window{-60, 60}, 20)
            .verdict == Verdict::Pass);
  CHECK(check_ultrametric(make_standard(ClosedForm::pchar(BigInt(2))),
                          Window{-60, 60}, 20)
            .verdict == Verdict::Pass);

  const CheckReport eu = check_ultrametric(make_standard(ClosedForm::euclid()),
                                           Window{-100, 100}, 20);
  CHECK(eu.verdict == Verdict::FailWitness);
  CHECK(eu.m == BigInt(1));
  CHECK(eu.n == BigInt(1));
  CHECK(eu.oracle_checked);
  CHECK(eu.oracle_agrees);

  const CheckReport rt = check_ultrametric(
      make_standard(ClosedForm::power_euclid(Q("1/2"))), Window{-10, 10}, 20);
  CHECK(rt.verdict == Verdict::FailWitness);
  CHECK(rt.m == BigInt(1));
  CHECK(rt.n == BigInt(1));
}

TEST_CASE("non-archimedean witnesses imply the ultrametric inequality") {
  const std::vector<ClosedForm> kinds = {
      ClosedForm::padic(BigInt(11)), ClosedForm::pchar(BigInt(2)),
      ClosedForm::power_padic(BigInt(3), fin("-1/2"))};
  for (const ClosedForm& cf : kinds) {
    const AbsValue av = make_standard(cf);
    const NaResult na = detect_na(av, 20, 20);
    REQUIRE(na.non_archimedean());
    const Window w = cf.kind == CFKind::PowerPadic ? Window{-40, 40}
                                                   : Window{-200, 200};
    CHECK(check_ultrametric(av, w, 20).verdict == Verdict::Pass);
  }
}

TEST_CASE("non-archimedean detection is one-sided") {
  const NaResult w11 =
      detect_na(make_standard(ClosedForm::padic(BigInt(11))), 20, 10);
  REQUIRE(w11.non_archimedean());
  CHECK(*w11.witness == BigInt(11));
  CHECK(w11.bound == Q("1/11"));

  const NaResult least =
      detect_na(make_standard(ClosedForm::padic(BigInt(5))), 30, 10);
  CHECK(*least.witness == BigInt(5));

  const NaResult ch =
      detect_na(make_standard(ClosedForm::pchar(BigInt(2))), 10, 10);
  CHECK(*ch.witness == BigInt(2));
  CHECK(ch.bound == Q("0"));

  const NaResult tw = detect_na(
      make_standard(ClosedForm::power_padic(BigInt(3), fin("-1/2"))), 10, 20);
  CHECK(*tw.witness == BigInt(3));
  CHECK(tw.bound < Rational(1));

  CHECK(!detect_na(make_standard(ClosedForm::trivial()), 1000, 30)
             .non_archimedean());
  CHECK(!detect_na(make_standard(ClosedForm::euclid()), 1000, 30)
             .non_archimedean());

  CHECK(thrown_code([] {
          detect_na(make_standard(ClosedForm::euclid()), 1, 10);
        }) == Errc::BadParameter);
}

TEST_CASE("p-characteristic is the stagewise floor of the p-adic twists") {
  const AbsValue ch = make_standard(ClosedForm::pchar(BigInt(2)));
  CHECK(av_eval(ch, BigInt(6), 20) == fin("0"));
  Rational prev(2);
  for (int k = 0; k <= 6; ++k) {
    const long lam = -(1L << k);
    const AbsValue tw = make_standard(
        ClosedForm::power_padic(BigInt(2), ExtRational(Rational(lam))));
    const ExtRational b = av_eval(tw, BigInt(6), 20);
    REQUIRE(b.is_finite());
    CHECK(b.value() == Rational::two_pow(lam));  // ord_2(6) = 1
    CHECK(b.value() < prev);
    prev = b.value();
  }
  CHECK(prev == Rational::two_pow(-64));
  CHECK(prev < Rational::two_pow(-20));
}

TEST_CASE("dedekind values from closed forms") {
  const DedekindReal d5 =
      dedekindize(make_standard(ClosedForm::padic(BigInt(5))), BigInt(10));
  CHECK(d5.interval(8).lo == Q("1/5"));
  CHECK(d5.interval(8).hi == Q("1/5"));

  const DedekindReal d3 = dedekindize(
      make_standard(ClosedForm::power_euclid(Q("1/2"))), BigInt(9));
  CHECK(d3.interval(5).lo == Rational(3));
  CHECK(d3.interval(5).hi == Rational(3));

  const DedekindReal dt =
      dedekindize(make_standard(ClosedForm::trivial()), BigInt(-4));
  CHECK(dt.interval(3).lo == Rational(1));

  const DedekindReal dz =
      dedekindize(make_standard(ClosedForm::pchar(BigInt(2))), BigInt(6));
  CHECK(dz.interval(3).hi == Rational(0));

  const DedekindReal dsq = dedekindize(
      make_standard(ClosedForm::power_euclid(Q("1/2"))), BigInt(2));
  const Iv iv = dsq.interval(20);
  CHECK(iv.width() <= Rational::two_pow(-20));
  CHECK(iv.lo * iv.lo <= Rational(2));
  CHECK(iv.hi * iv.hi >= Rational(2));

  CHECK(thrown_code([] {
          dedekindize(AbsValue::custom("gen",
                                       [](const BigInt&) {
                                         return UpperReal::one();
                                       }),
                      BigInt(3));
        }) == Errc::NoClosedForm);
}

TEST_CASE("rational extension divides closed-form values") {
  const AbsValue eu = make_standard(ClosedForm::euclid());
  CHECK(extend_to_Q(eu, Q("2/3")).interval(6).lo == Q("2/3"));
  CHECK(extend_to_Q(eu, Q("2/3")).interval(6).hi == Q("2/3"));
  CHECK(extend_to_Q(eu, Q("0")).interval(2).hi == Rational(0));

  const AbsValue p3 = make_standard(ClosedForm::padic(BigInt(3)));
  CHECK(extend_to_Q(p3, Q("4/9")).interval(6).lo == Rational(9));
  CHECK(extend_to_Q(p3, Q("4/9")).interval(6).hi == Rational(9));

  const AbsValue ch2 = make_standard(ClosedForm::pchar(BigInt(2)));
  CHECK(thrown_code([&] { extend_to_Q(ch2, Q("1/6")); }) ==
        Errc::ZeroDenominator);
  CHECK(extend_to_Q(ch2, Q("6/5")).interval(4).hi == Rational(0));

  // sqrt(2)/3 from the square-root twist: bracket with relative headroom.
  const AbsValue rt = make_standard(ClosedForm::power_euclid(Q("1/2")));
  const Iv q = extend_to_Q(rt, Q("2/9")).interval(20);
  CHECK(q.width() <= Rational::two_pow(-20));
  CHECK((q.lo * Rational(3)).pow_int(2) <= Rational(2));
  CHECK((q.hi * Rational(3)).pow_int(2) >= Rational(2));

  // 1/|8| under the half-exponent 2-adic twist: the value is 2^(3/2).
  const AbsValue tw =
      make_standard(ClosedForm::power_padic(BigInt(2), fin("-1/2")));
  const Iv w = extend_to_Q(tw, Q("3/8")).interval(20);
  CHECK(w.width() <= Rational::two_pow(-20));
  CHECK(w.lo.pow_int(2) <= Rational(8));
  CHECK(w.hi.pow_int(2) >= Rational(8));

  CHECK(thrown_code([&] {
          extend_to_Q(AbsValue::custom("gen",
                                       [](const BigInt&) {
                                         return UpperReal::one();
                                       }),
                      Q("1/2"));
        }) == Errc::NoClosedForm);
}
