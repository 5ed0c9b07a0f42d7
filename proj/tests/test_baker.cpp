#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pade/baker.hpp"
#include "support/grid.hpp"
#include "support/series_oracle.hpp"

using namespace pade;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

const QuadraticInt one{Int(1)};

bool contains_ref(const RatInterval& x, const RatInterval& ref) { return x.intersects(ref); }

} // namespace

TEST_CASE("growth constants at the base point") {
    LambdaConfig c0 = validate_config({rat(0)});
    BoundConstants c = compute_constants(c0, one, one, 1, pow10(-20));

    CHECK(c.c1.lo == rat(2));
    CHECK(c.c1.hi == rat(2));
    CHECK(c.c3.lo == rat(0));
    CHECK(c.c3.hi == rat(0));

    RatInterval ln2 = oracle::log_ref(rat(2), pow10(-30));
    CHECK(contains_ref(c.c2, Rational(3) * ln2 + rat(24)));
    CHECK(c.c4.lo == rat(24));
    CHECK(c.c4.hi == rat(24));
    CHECK(contains_ref(c.c5, ln2 + rat(2)));
    CHECK(contains_ref(c.c6, Rational(6) * ln2 + rat(48)));
    CHECK(contains_ref(c.e1, Rational(6) * ln2 + rat(49)));
    CHECK(contains_ref(c.b1, Rational(3) * ln2 + rat(50)));
    // e3 = c5 dominates b3 = c1 + c3, so N2 = c5.
    CHECK(c.N2.lo == c.c5.lo);
    CHECK(c.N2.hi == c.c5.hi);

    // S = 1 kills every log S term: c2 - 24 is exactly 3 log 2.
    CHECK(contains_ref(c.c2 - rat(24), Rational(3) * ln2));
}

TEST_CASE("grouped constants") {
    LambdaConfig c0 = validate_config({rat(0)});
    DConstants d = compute_d_constants(c0, one, one, pow10(-20));
    RatInterval ln2 = oracle::log_ref(rat(2), pow10(-30));

    CHECK(contains_ref(d.d0, Rational(3) * ln2 + rat(39)));
    CHECK(contains_ref(d.d1, Rational(6) * ln2 + rat(37)));
    CHECK(d.d2.lo == rat(12));
    CHECK(d.d2.hi == rat(12));

    // d2 has no alpha or b dependence.
    DConstants d_other = compute_d_constants(c0, QuadraticInt(Int(7)), QuadraticInt(Int(3)), pow10(-20));
    CHECK(d_other.d2.lo == rat(12));
    CHECK(d_other.d2.hi == rat(12));
    CHECK(!(d_other.d0.lo == d.d0.lo)); // log|b| enters d0
}

TEST_CASE("regrouped identity is exact; printed grouping differs by d2 m") {
    for (const LambdaConfig& cfg : grid::configs(2)) {
        for (const auto& alpha : grid::alphas()) {
            DConstants d = compute_d_constants(cfg, alpha.a, alpha.b, pow10(-14));
            for (int m = 1; m <= 3; ++m) {
                BoundConstants c = compute_constants(cfg, alpha.a, alpha.b, m, pow10(-14));
                RatInterval lhs = RatInterval::point(rat(1)) + c.b1 + Rational(m) * c.e1;
                RatInterval regrouped = d.d0 + Rational(m) * (d.d1 + d.d2) + Rational(m * m) * d.d2;
                REQUIRE(lhs.intersects(regrouped));

                RatInterval printed = d.d0 + Rational(m) * d.d1 + Rational(m * m) * d.d2;
                RatInterval gap = lhs - printed;
                REQUIRE(gap.intersects(Rational(m) * d.d2)); // off by exactly d2 m
                REQUIRE(!lhs.intersects(printed));
            }
        }
    }
}

TEST_CASE("largest root of the admissibility equation") {
    // e1 = 1, m = 1: x log x = 2(x+1) has its root near 9.18.
    RatInterval x = solve_x2(RatInterval::point(rat(1)), 1);
    CHECK(x.lo >= rat(9));
    CHECK(x.hi <= rat(10));

    // Residual at the midpoint, via the independent series log.
    Rational mid = x.mid();
    RatInterval logmid = oracle::log_ref(mid, pow10(-20));
    RatInterval residual = RatInterval::point(mid) * logmid - RatInterval::point(rat(2) * (mid + rat(1)));
    CHECK(abs(residual).hi <= pow10(-6) * (rat(2) * (mid + rat(1))));

    // Monotone in e1; the function is positive past the root.
    RatInterval x10 = solve_x2(RatInterval::point(rat(10)), 1);
    RatInterval x60 = solve_x2(RatInterval::point(rat(60)), 1);
    CHECK(x.hi < x10.lo);
    CHECK(x10.hi < x60.lo);

    Rational beyond = x.hi * rat(2);
    RatInterval check = RatInterval::point(beyond) * oracle::log_ref(beyond, pow10(-20)) -
                        RatInterval::point(rat(2) * (beyond + rat(1)));
    CHECK(check.is_positive());

    // Nested outputs under e1-interval refinement.
    RatInterval loose = solve_x2(RatInterval{rat(99, 100), rat(101, 100)}, 1);
    CHECK(loose.contains(x));

    CHECK_THROWS_AS(solve_x2(RatInterval::point(rat(0)), 1), std::invalid_argument);
}

TEST_CASE("admissibility") {
    LambdaConfig c0 = validate_config({rat(0)});

    // Real desk-scale forms are far below the gate.
    LinearForm small = LinearForm::create({QuadraticInt(Int(-3)), QuadraticInt(Int(1000))}, one, one);
    BoundConstants c = compute_constants(c0, one, one, 1, pow10(-12));
    CHECK(admissibility(small, c) == Tristate::no);

    // Synthetic tiny constants make a moderate height admissible.
    BoundConstants synth = c;
    synth.e1 = RatInterval::point(rat(1, 20));
    synth.N2 = RatInterval::point(rat(1));
    LinearForm big = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(1000000))}, one, one);
    CHECK(admissibility(big, synth) == Tristate::yes);
    LinearForm tiny = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(2))}, one, one);
    CHECK(admissibility(tiny, synth) == Tristate::no);
}

TEST_CASE("height data") {
    LinearForm f = LinearForm::create(
        {QuadraticInt(Int(5)), QuadraticInt(Int(-7)), QuadraticInt(1, Int(3), Int(4)), QuadraticInt(Int(0))}, one, one);
    CHECK(f.m() == 3);
    CHECK(f.h_squared(1) == rat(49));
    CHECK(f.h_squared(2) == rat(25));
    CHECK(f.h_squared(3) == rat(1)); // clamped at 1
    CHECK(f.H_squared() == rat(49 * 25));

    CHECK_THROWS_AS(LinearForm::create({QuadraticInt(Int(0)), QuadraticInt(Int(0))}, one, one),
                    std::invalid_argument);

    RatInterval lh = f.log_H(pow10(-15));
    RatInterval ref = oracle::log_ref(rat(35), pow10(-20));
    CHECK(lh.intersects(ref));
    // log Hhat = m log(2m) + log H.
    RatInterval lhh = f.log_H_hat(pow10(-15));
    RatInterval ref_hat = Rational(3) * oracle::log_ref(rat(6), pow10(-20)) + ref;
    CHECK(lhh.intersects(ref_hat));
}

TEST_CASE("theorem bound against an independent composition") {
    LambdaConfig c0 = validate_config({rat(0)});
    DConstants d = compute_d_constants(c0, one, one, pow10(-15));
    LinearForm f = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(1000000))}, one, one);

    RatInterval bound = theorem_bound(f, d, pow10(-15));
    CHECK(bound.is_positive());

    // Oracle-side composition: H = 10^6 exactly.
    RatInterval lnH = oracle::log_ref(rat(1000000), pow10(-25));
    RatInterval lnlnH = oracle::log_ref(lnH.mid(), pow10(-25));
    // widen for the midpoint substitution
    lnlnH = RatInterval{lnlnH.lo - pow10(-20), lnlnH.hi + pow10(-20)};
    RatInterval D = d.d0 + d.d1 + d.d2;
    RatInterval expo = (RatInterval::point(rat(-1)) - (Rational(6) * D) / lnlnH) * lnH;
    // Snap the exponent to a 40-bit dyadic so the series oracle stays cheap;
    // the rounding is absorbed by the relative slack below.
    Int snapped;
    mpz_fdiv_q(snapped.get_mpz_t(), (expo.mid() * Rational(Int(Int(1) << 40))).numerator().get_mpz_t(),
               (expo.mid() * Rational(Int(Int(1) << 40))).denominator().get_mpz_t());
    Rational expo_mid(snapped, Int(Int(1) << 40));
    RatInterval ref = oracle::exp_ref(expo_mid, pow10(-200));
    // Allow a hair of relative slack for the midpoint substitutions above.
    RatInterval ref_wide{ref.lo * (rat(1) - pow10(-8)), ref.hi * (rat(1) + pow10(-8))};
    CHECK(bound.intersects(ref_wide));

    // Domain gate: H = 1 is rejected.
    LinearForm unit = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(1))}, one, one);
    CHECK_THROWS_AS(theorem_bound(unit, d, pow10(-15)), DomainError);

    // Monotone decreasing in H on samples.
    LinearForm f2 = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(10000000))}, one, one);
    RatInterval bound2 = theorem_bound(f2, d, pow10(-15));
    CHECK(bound2.hi < bound.lo);

    // Exponent drifts toward -1 as H grows.
    auto exponent_gap = [&](const LinearForm& form) {
        RatInterval lh = form.log_H(pow10(-15));
        RatInterval llh = log_of(lh, pow10(-15));
        return ((Rational(6) * (d.d0 + d.d1 + d.d2)) / llh).hi;
    };
    CHECK(exponent_gap(f2) < exponent_gap(f));
}

TEST_CASE("corollary bound sanity") {
    LambdaConfig c0 = validate_config({rat(0)});
    BoundConstants synth = compute_constants(c0, one, one, 1, pow10(-15));
    synth.b1 = RatInterval::point(rat(1));
    synth.e1 = RatInterval::point(rat(1));

    LinearForm f = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(1000000))}, one, one);
    RatInterval bound = corollary_bound(f, synth, pow10(-15));
    CHECK(bound.is_positive());

    // Monotone decreasing in height.
    LinearForm f2 = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(100000000))}, one, one);
    CHECK(corollary_bound(f2, synth, pow10(-15)).hi < bound.lo);

    LinearForm unit = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(1))}, one, one);
    CHECK_THROWS_AS(corollary_bound(unit, synth, pow10(-15)), DomainError);
}

TEST_CASE("linear form evaluation") {
    LambdaConfig c0 = validate_config({rat(0)});

    LinearForm unit = LinearForm::create({QuadraticInt(Int(1)), QuadraticInt(Int(0))}, one, one);
    ComplexEnclosure v = evaluate_linear_form(unit, c0, pow10(-12));
    CHECK(v.re.lo == rat(1));
    CHECK(v.re.hi == rat(1));

    LinearForm em3 = LinearForm::create({QuadraticInt(Int(-3)), QuadraticInt(Int(1))}, one, one);
    ComplexEnclosure w = evaluate_linear_form(em3, c0, pow10(-12));
    RatInterval ref = oracle::e_ref(pow10(-30)) - rat(3);
    CHECK(w.re.intersects(ref));
    CHECK(w.re.hi < rat(-28, 100));
    CHECK(w.re.lo > rat(-29, 100));

    // Refinement containment.
    ComplexEnclosure w2 = evaluate_linear_form(em3, c0, pow10(-20));
    CHECK(w.re.contains(w2.re));
}

TEST_CASE("form certification end to end") {
    LambdaConfig c0 = validate_config({rat(0)});
    LinearForm em3 = LinearForm::create({QuadraticInt(Int(-3)), QuadraticInt(Int(1))}, one, one);
    BoundReport rep = certify_form(em3, c0, pow10(-10));

    CHECK(rep.admissible == Tristate::no);
    CHECK(rep.comparison_empirical);
    CHECK(!rep.have_theorem); // H = 1 is below the bound's domain
    CHECK(rep.value_abs_squared.lo > rat(7, 100));
    CHECK(rep.value_abs_squared.hi < rat(8, 100));
    CHECK(!rep.identity_overlap);

    // A taller form gets the full comparison.
    LinearForm tall = LinearForm::create({QuadraticInt(Int(-3)), QuadraticInt(Int(100))}, one, one);
    BoundReport rep2 = certify_form(tall, c0, pow10(-10));
    CHECK(rep2.have_theorem);
    CHECK(rep2.comparison == Tristate::yes);
    CHECK(rep2.comparison_empirical);
}

TEST_CASE("stress runs are clean and deterministic") {
    LambdaConfig c01 = validate_config({rat(0), rat(1, 2)});
    StressSummary s1 = stress_run(c01, one, QuadraticInt(Int(2)), 150, 42, 1000, 0);
    CHECK(s1.trials == 150);
    CHECK(s1.violations == 0);
    CHECK(s1.zero_enclosures == 0);
    CHECK(s1.undecided == 0);

    StressSummary s2 = stress_run(c01, one, QuadraticInt(Int(2)), 150, 42, 1000, 0);
    CHECK(s1.min_ratio_lo == s2.min_ratio_lo);
    CHECK(s1.skipped_small_h == s2.skipped_small_h);

    StressSummary s3 = stress_run(c01, one, QuadraticInt(Int(2)), 150, 43, 1000, 0);
    CHECK(!(s3.min_ratio_lo == s1.min_ratio_lo));

    // Gaussian coefficients against a Gaussian point.
    QuadraticInt i1(1, Int(0), Int(1));
    StressSummary sg = stress_run(c01, i1, one, 60, 7, 1000, 1);
    CHECK(sg.violations == 0);
}

TEST_CASE("deterministic prng") {
    SplitMix64 a{123}, b{123};
    for (int t = 0; t < 100; ++t) CHECK(a.next() == b.next());
    SplitMix64 c{1};
    for (int t = 0; t < 1000; ++t) {
        long v = c.uniform(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
}
