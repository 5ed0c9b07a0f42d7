#ifndef PADE_FACTORIALS_HPP
#define PADE_FACTORIALS_HPP

#include "pade/primes.hpp"
#include "pade/rational.hpp"

namespace pade {

/// (q)_n = q (q+1) ... (q+n-1); empty product for n = 0.
Rational rising_factorial(const Rational& q, unsigned long n);

/// [nu] = (lambda+1)(lambda+2)...(lambda+nu) = (lambda+1)_nu.
/// Throws std::domain_error when a factor vanishes (lambda a negative
/// integer with nu >= |lambda|).
Rational bracket_factorial(const Rational& lambda, unsigned long nu);

/// Divisibility certificate for the reduced quotients u_k/v_k =
/// (alpha+1)_k / k!, k = 0..n: lcm(u_k) divides the prime-power product
/// over p not dividing s with bound |r|+s*n, and lcm(v_k) divides s^(2n).
struct FactorialDenominatorReport {
    Rational alpha;
    unsigned long n = 0;
    Int lcm_numerators = 1;   // lcm |u_0|, ..., |u_n|
    Int lcm_denominators = 1; // lcm v_0, ..., v_n
    Int numerator_modulus = 1;   // the U bound
    Int denominator_modulus = 1; // the V bound = s^(2n)
    bool numerators_divide = false;
    bool denominators_divide = false;
    bool pass = false;
};

/// Precondition: alpha = r/s reduced, s >= 1, alpha not in {-1, -2, ...}.
FactorialDenominatorReport verify_rising_factorial_denominators(const Rational& alpha, unsigned long n);

} // namespace pade

#endif
