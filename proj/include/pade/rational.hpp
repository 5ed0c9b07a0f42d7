#ifndef PADE_RATIONAL_HPP
#define PADE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pade {

using Int = mpz_class;

/// Reduced fraction with positive denominator; the scalar of all exact
/// computation in this library. Canonical zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : q_(e) { q_.canonicalize(); }

    // Parses "p/q" or "p" (decimal digits, optional leading '-').
    static std::optional<Rational> parse(std::string_view s);

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_negative_integer() const { return is_integer() && sgn(q_) < 0; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const;
    Rational squared() const { return *this * *this; }

    // "p/q", with "/q" omitted when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

// Exact b^e for integer e (negative e inverts; throws on 0^negative).
Rational pow(const Rational& base, long exponent);

// 10^(-k) as an exact rational, handy for tolerance arguments.
Rational pow10(long k);

} // namespace pade

#endif
