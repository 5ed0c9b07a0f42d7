#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pade/efunction.hpp"
#include "support/series_oracle.hpp"

using namespace pade;

namespace {
Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }
} // namespace

TEST_CASE("configuration validation") {
    LambdaConfig cfg = validate_config({rat(0), rat(1, 2)});
    CHECK(cfg.m() == 2);
    CHECK(cfg.R == 1);
    CHECK(cfg.S == 2);
    CHECK(cfg.Rhat == 1);
    CHECK(cfg.Shat == 2);

    LambdaConfig single = validate_config({rat(-1, 2)});
    CHECK(single.R == 1);
    CHECK(single.S == 2);
    CHECK(single.Rhat == 0);
    CHECK(single.Shat == 0);

    try {
        validate_config({rat(0), rat(1)});
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::integer_difference);
        CHECK(e.i == 2);
        CHECK(e.j == 1);
    }
    try {
        validate_config({rat(-2)});
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::negative_integer_lambda);
        CHECK(e.i == 1);
    }

    LambdaConfig three = validate_config({rat(1, 4), rat(1, 3), rat(2, 3)});
    CHECK(three.S == 4);
    CHECK(three.Shat == 12); // 1/3 - 1/4 = 1/12
    CHECK(three.Rhat == 5);  // 2/3 - 1/4 = 5/12
}

TEST_CASE("series coefficients") {
    CHECK(phi_coefficient(rat(0), 4) == rat(1, 24));
    CHECK(phi_coefficient(rat(1, 2), 2) == rat(4, 15));
    CHECK(phi_coefficient(rat(-1, 3), 0) == rat(1));
}

TEST_CASE("series enclosure at rational points") {
    // Shift zero at z = 1 is the classical exponential constant.
    ComplexEnclosure e1 = phi_enclosure(rat(0), QuadRational(rat(1)), pow10(-8));
    CHECK(e1.re.width() <= pow10(-8));
    CHECK(e1.im.lo == rat(0));
    CHECK(e1.im.hi == rat(0));
    CHECK(e1.re.intersects(oracle::e_ref(pow10(-30))));

    ComplexEnclosure at_zero = phi_enclosure(rat(5, 6), QuadRational(rat(0)), pow10(-8));
    CHECK(at_zero.re.lo == rat(1));
    CHECK(at_zero.re.hi == rat(1));

    // Brute-force partial sum with a crude remainder as the reference.
    ComplexEnclosure v = phi_enclosure(rat(1, 2), QuadRational(rat(1)), pow10(-6));
    CHECK(v.re.width() <= pow10(-6));
    Rational sum(0), bracket(1);
    for (unsigned long nu = 0; nu <= 60; ++nu) {
        if (nu > 0) bracket *= rat(1, 2) + Rational(Int(static_cast<long>(nu)));
        sum += bracket.reciprocal();
    }
    Rational crude = bracket.reciprocal() * rat(2);
    CHECK(v.re.intersects(RatInterval{sum - crude, sum + crude}));
    // The 60-term oracle puts the value at 2.0300784... ((e sqrt(pi)/2) erf 1).
    CHECK(v.re.lo <= Rational::parse("20300785/10000000").value());
    CHECK(v.re.hi >= Rational::parse("20300784/10000000").value());

    // Negative argument, larger shift denominators.
    ComplexEnclosure w = phi_enclosure(rat(-1, 3), QuadRational(rat(-2)), pow10(-12));
    CHECK(w.re.width() <= pow10(-12));
}

TEST_CASE("series enclosure at a Gaussian point") {
    // Shift zero at z = i: real part cos 1, imaginary part sin 1.
    QuadRational alpha_i(1, rat(0), rat(1));
    ComplexEnclosure v = phi_enclosure(rat(0), alpha_i, pow10(-10));
    CHECK(v.re.width() <= pow10(-10));
    CHECK(v.im.width() <= pow10(-10));

    // Alternating-series references for cos 1 and sin 1.
    Rational c(0), s(0);
    Int fac(1);
    for (unsigned long k = 0; k <= 40; ++k) {
        if (k > 0) fac *= Int(static_cast<long>(k));
        Rational term = Rational(Int(1), fac);
        if (k % 4 == 0) c += term;
        else if (k % 4 == 1) s += term;
        else if (k % 4 == 2) c -= term;
        else s -= term;
    }
    Rational slack = pow10(-30);
    CHECK(v.re.intersects(RatInterval{c - slack, c + slack}));
    CHECK(v.im.intersects(RatInterval{s - slack, s + slack}));
}

TEST_CASE("monotone refinement nesting") {
    const QuadRational points[] = {QuadRational(rat(1)), QuadRational(rat(-5, 3)), QuadRational(1, rat(1, 2), rat(1))};
    const Rational lambdas[] = {rat(0), rat(1, 2), rat(-1, 3), rat(5, 6)};
    for (const auto& alpha : points) {
        for (const auto& l : lambdas) {
            ComplexEnclosure wide = phi_enclosure(l, alpha, pow10(-6));
            ComplexEnclosure mid = phi_enclosure(l, alpha, pow10(-9));
            ComplexEnclosure tight = phi_enclosure(l, alpha, pow10(-12));
            CHECK(wide.re.contains(mid.re));
            CHECK(mid.re.contains(tight.re));
            CHECK(wide.im.contains(mid.im));
            CHECK(mid.im.contains(tight.im));
        }
    }
}

TEST_CASE("tail majorant validity") {
    // |1/[nu]| <= (2 s^2)^nu / nu!, checked exactly along the series.
    const Rational lambdas[] = {rat(1, 2), rat(-1, 2), rat(1, 3), rat(2, 3), rat(1, 4),
                                rat(-1, 3), rat(1, 5), rat(5, 6), rat(-1, 6)};
    for (const Rational& l : lambdas) {
        const Rational two_s2 = rat(2) * Rational(l.denominator()) * Rational(l.denominator());
        Rational bracket(1), majorant(1);
        for (unsigned long nu = 1; nu <= 500; ++nu) {
            bracket *= l + Rational(Int(static_cast<long>(nu)));
            majorant *= two_s2 / Rational(Int(static_cast<long>(nu)));
            REQUIRE(bracket.reciprocal().abs() <= majorant);
        }
    }
}
