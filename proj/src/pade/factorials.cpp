#include "pade/factorials.hpp"

namespace pade {

Rational rising_factorial(const Rational& q, unsigned long n) {
    Rational acc(1);
    Rational term = q;
    for (unsigned long k = 0; k < n; ++k) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

Rational bracket_factorial(const Rational& lambda, unsigned long nu) {
    if (lambda.is_negative_integer()) {
        Int bound = -lambda.numerator();
        if (Rational(Int(static_cast<long>(nu))) >= Rational(bound))
            throw std::domain_error("bracket_factorial: zero factor at lambda = " + lambda.str());
    }
    return rising_factorial(lambda + Rational(1), nu);
}

FactorialDenominatorReport verify_rising_factorial_denominators(const Rational& alpha, unsigned long n) {
    if (alpha.is_negative_integer())
        throw std::domain_error("verify_rising_factorial_denominators: alpha must not be a negative integer");
    FactorialDenominatorReport rep;
    rep.alpha = alpha;
    rep.n = n;

    Int r = alpha.numerator();
    Int s = alpha.denominator();

    // u_k / v_k = (alpha+1)_k / k!, accumulated incrementally.
    Rational quotient(1);
    for (unsigned long k = 1; k <= n; ++k) {
        quotient *= (alpha + Rational(Int(static_cast<long>(k)))) / Rational(Int(static_cast<long>(k)));
        rep.lcm_numerators = lcm(rep.lcm_numerators, quotient.numerator());
        rep.lcm_denominators = lcm(rep.lcm_denominators, quotient.denominator());
    }
    rep.lcm_numerators = ::abs(rep.lcm_numerators);

    Rational bound = Rational(::abs(r)) + Rational(s) * Rational(Int(static_cast<long>(n)));
    rep.numerator_modulus = prime_power_product(bound, prime_divisors(s)).value;
    Int v;
    mpz_pow_ui(v.get_mpz_t(), s.get_mpz_t(), 2 * n);
    rep.denominator_modulus = v;

    rep.numerators_divide = mpz_divisible_p(rep.numerator_modulus.get_mpz_t(), rep.lcm_numerators.get_mpz_t()) != 0;
    rep.denominators_divide = mpz_divisible_p(rep.denominator_modulus.get_mpz_t(), rep.lcm_denominators.get_mpz_t()) != 0;
    rep.pass = rep.numerators_divide && rep.denominators_divide;
    return rep;
}

} // namespace pade
