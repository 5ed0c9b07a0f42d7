#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pade/certificates.hpp"
#include "pade/pade_explicit.hpp"
#include "support/grid.hpp"

using namespace pade;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

std::vector<Rational> rats(std::initializer_list<const char*> strs) {
    std::vector<Rational> out;
    for (const char* s : strs) out.push_back(Rational::parse(s).value());
    return out;
}

const QuadraticInt one{Int(1)};

} // namespace

TEST_CASE("determinant collapse, hand case") {
    LambdaConfig c0 = validate_config({rat(0)});
    PadeSystem sys = build_system(c0, DegreeVector::of({1}), Source::explicit_formula);
    DeterminantCheck det = omega_determinant(sys);
    CHECK(det.pass);
    CHECK(det.expected_degree == 3);
    CHECK(det.omega == Poly::monomial(rat(-1, 2), 3));
    CHECK(det.expected_leading == rat(-1, 2));
}

TEST_CASE("determinant collapse across a sample") {
    for (const LambdaConfig& cfg : grid::configs(3)) {
        DegreeVector deg = DegreeVector::of(std::vector<unsigned>(static_cast<size_t>(cfg.m()), 2));
        PadeSystem sys = build_system(cfg, deg, Source::explicit_formula);
        DeterminantCheck det = omega_determinant(sys);
        REQUIRE(det.pass);

        // Independent evaluation of the leading-coefficient product.
        Rational expect = -Rational(Int(1), factorial(deg.N()));
        for (int i = 1; i <= cfg.m(); ++i)
            for (unsigned nu = 1; nu <= deg.N() + 1; ++nu)
                expect *= (cfg.lambda(i) + Rational(Int(static_cast<long>(nu)))).reciprocal();
        REQUIRE(det.omega.leading() == expect);
    }
}

TEST_CASE("denominators, hand cases") {
    LambdaConfig c0 = validate_config({rat(0)});
    DegreeVector d1 = DegreeVector::of({1});
    DenominatorCertificate cert = build_denominators(c0, d1, one, one, pow10(-10));
    CHECK(cert.D1.value == 1);
    CHECK(cert.D2.value == 2);
    CHECK(cert.D1star.value == 2);
    CHECK(cert.D2star.value == 2);
    CHECK(cert.DN == QuadraticInt(Int(2)));
    CHECK(cert.d1_divides_d1star);
    CHECK(cert.d2_divides_d2star);
    CHECK(cert.d1_divides_d2);

    // Scaling by b^(N+1) for alpha = 1/2.
    DenominatorCertificate half = build_denominators(c0, d1, one, QuadraticInt(Int(2)), pow10(-10));
    CHECK(half.DN == QuadraticInt(Int(8)));

    LambdaConfig c01 = validate_config({rat(0), rat(1, 2)});
    DegreeVector d11 = DegreeVector::of({1, 1});
    DenominatorCertificate cert2 = build_denominators(c01, d11, one, one, pow10(-10));
    // s-powers 1 * 2^4, node-difference products lcm(1..3)^2 = 36.
    CHECK(cert2.D1.value == 576);
    CHECK(cert2.D1.factors == std::map<unsigned long, unsigned long>{{2, 6}, {3, 2}});
}

TEST_CASE("denominator bounds hold with room") {
    for (const LambdaConfig& cfg : grid::configs(2)) {
        DegreeVector deg = DegreeVector::of(cfg.m() == 1 ? std::vector<unsigned>{4} : std::vector<unsigned>{2, 4});
        DenominatorCertificate cert = build_denominators(cfg, deg, one, one, pow10(-10));
        REQUIRE(Rational(cert.D1.value) <= cert.E1.lo);
        REQUIRE(Rational(cert.D2.value) <= cert.E2.lo);
        REQUIRE(Rational(cert.D1star.value) <= cert.E1star.lo);
        REQUIRE(Rational(cert.D2star.value) <= cert.E2star.lo);
        REQUIRE(cert.d1_divides_d1star);
        REQUIRE(cert.d2_divides_d2star);
    }
}

TEST_CASE("integrality certificates") {
    LambdaConfig c0 = validate_config({rat(0)});
    PadeSystem sys = build_system(c0, DegreeVector::of({1}), Source::explicit_formula);
    DenominatorCertificate cert = build_denominators(c0, sys.degrees, one, one, pow10(-10));
    CHECK(all_passed(verify_integrality(sys, cert)));

    LambdaConfig ch = validate_config({rat(1, 2)});
    PadeSystem sysh = build_system(ch, DegreeVector::of({1}), Source::explicit_formula);
    DenominatorCertificate certh = build_denominators(ch, sysh.degrees, one, one, pow10(-10));
    CHECK(all_passed(verify_integrality(sysh, certh)));

    // A too-small clearing factor is reported, not silently accepted.
    DenominatorCertificate broken = certh;
    broken.D1star.value = 1;
    auto verdicts = verify_integrality(sysh, broken);
    CHECK(any_failed(verdicts));
}

TEST_CASE("size and remainder bounds, hand case") {
    LambdaConfig c0 = validate_config({rat(0)});
    PadeSystem sys = build_system(c0, DegreeVector::of({1}), Source::explicit_formula);
    DenominatorCertificate cert = build_denominators(c0, sys.degrees, one, one, pow10(-10));
    BoundConstants constants = compute_constants(c0, one, one, 1, pow10(-10));

    CHECK(all_passed(verify_size_bounds(sys, one, one, cert, constants)));
    CHECK(all_passed(verify_remainder_bound(sys, one, one, cert, constants)));
    CHECK(all_passed(verify_membership(sys, one, one, cert)));
}

TEST_CASE("full certificates on sampled points") {
    for (const LambdaConfig& cfg : grid::configs(2)) {
        DegreeVector deg = DegreeVector::of(cfg.m() == 1 ? std::vector<unsigned>{2} : std::vector<unsigned>{1, 2});
        PadeSystem sys = build_system(cfg, deg, Source::explicit_formula);
        for (const auto& alpha : grid::alphas()) {
            Certificate cert = certify_system(sys, alpha.a, alpha.b, pow10(-10));
            CAPTURE(alpha.name);
            REQUIRE(cert.overall == Tristate::yes);
        }
    }
}

TEST_CASE("membership catches non-integral scalings") {
    LambdaConfig ch = validate_config({rat(1, 2)});
    PadeSystem sys = build_system(ch, DegreeVector::of({2}), Source::explicit_formula);
    DenominatorCertificate cert = build_denominators(ch, sys.degrees, one, one, pow10(-10));
    cert.DN = QuadraticInt(Int(1)); // deliberately too small
    auto verdicts = verify_membership(sys, one, one, cert);
    CHECK(any_failed(verdicts));
}

TEST_CASE("source equality verdicts") {
    LambdaConfig c01 = validate_config({rat(0), rat(1, 2)});
    CHECK(all_passed(verify_source_equality(c01, DegreeVector::of({2, 1}))));
}

TEST_CASE("order verdicts flag tampered systems") {
    LambdaConfig c0 = validate_config({rat(0)});
    PadeSystem sys = build_system(c0, DegreeVector::of({2}), Source::explicit_formula);
    CHECK(all_passed(verify_orders(sys)));

    PadeSystem tampered = sys;
    auto coeffs = tampered.rows[0].P[0].coefficients();
    coeffs[0] += rat(1, 7);
    tampered.rows[0].P[0] = Poly::from_coefficients(coeffs);
    auto verdicts = verify_orders(tampered);
    CHECK(any_failed(verdicts));
}
