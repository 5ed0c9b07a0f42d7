#ifndef PADE_PRIMES_HPP
#define PADE_PRIMES_HPP

#include "pade/rational.hpp"

#include <vector>

namespace pade {

/// Primes p <= n in increasing order, served from a grow-on-demand cached
/// sieve. Safe for concurrent callers.
std::vector<unsigned long> primes_up_to(unsigned long n);

/// Distinct primes dividing |n|.
std::vector<unsigned long> prime_divisors(const Int& n);

/// Largest e >= 0 with p^e <= x, by exact integer comparison.
unsigned long max_power_below(unsigned long p, const Rational& x);

/// Product over primes p <= bound, p not excluded, of p^max{e : p^e <= bound}.
/// With no exclusions and integral bound n this equals lcm(1, ..., n).
struct PrimePowerProduct {
    Rational bound;
    std::vector<unsigned long> excluded;
    Int value;
    std::vector<std::pair<unsigned long, unsigned long>> factorization;
};

PrimePowerProduct prime_power_product(const Rational& x, std::vector<unsigned long> excluded = {});

} // namespace pade

#endif
