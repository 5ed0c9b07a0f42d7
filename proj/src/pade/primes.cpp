#include "pade/primes.hpp"

#include <algorithm>
#include <mutex>

namespace pade {

namespace {

std::mutex sieve_mutex;
std::vector<unsigned long> sieve_primes; // all primes <= sieve_limit
unsigned long sieve_limit = 1;

void grow_sieve(unsigned long n) {
    unsigned long limit = std::max<unsigned long>(n, 2 * sieve_limit);
    limit = std::max<unsigned long>(limit, 256);
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    sieve_primes = std::move(primes);
    sieve_limit = limit;
}

} // namespace

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::lock_guard<std::mutex> lock(sieve_mutex);
    if (n > sieve_limit) grow_sieve(n);
    auto end = std::upper_bound(sieve_primes.begin(), sieve_primes.end(), n);
    return {sieve_primes.begin(), end};
}

std::vector<unsigned long> prime_divisors(const Int& n) {
    Int m = ::abs(n);
    std::vector<unsigned long> out;
    if (m <= 1) return out;
    unsigned long p = 2;
    while (true) {
        Int pp(static_cast<long>(p));
        if (pp * pp > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= pp;
        }
        ++p;
    }
    if (m > 1) {
        if (!m.fits_ulong_p()) throw std::overflow_error("prime_divisors: factor exceeds unsigned long");
        out.push_back(m.get_ui());
    }
    return out;
}

unsigned long max_power_below(unsigned long p, const Rational& x) {
    Int power(static_cast<long>(p));
    if (Rational(power) > x) return 0;
    unsigned long e = 1;
    while (Rational(power * Int(static_cast<long>(p))) <= x) {
        power *= Int(static_cast<long>(p));
        ++e;
    }
    return e;
}

PrimePowerProduct prime_power_product(const Rational& x, std::vector<unsigned long> excluded) {
    PrimePowerProduct out;
    out.bound = x;
    std::sort(excluded.begin(), excluded.end());
    out.excluded = excluded;
    out.value = 1;
    if (x < Rational(2)) return out;
    Int floor_x;
    mpz_fdiv_q(floor_x.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    if (!floor_x.fits_ulong_p()) throw std::overflow_error("prime_power_product: bound too large to sieve");
    for (unsigned long p : primes_up_to(floor_x.get_ui())) {
        if (std::binary_search(excluded.begin(), excluded.end(), p)) continue;
        unsigned long e = max_power_below(p, x);
        if (e == 0) continue;
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        out.value *= pe;
        out.factorization.emplace_back(p, e);
    }
    return out;
}

} // namespace pade
