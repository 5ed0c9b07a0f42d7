#ifndef PADE_INTERVAL_HPP
#define PADE_INTERVAL_HPP

#include "pade/rational.hpp"

#include <stdexcept>

namespace pade {

/// Closed interval with exact rational endpoints. Every operation returns an
/// interval containing the exact image of its inputs, so a chain of these is a
/// rigorous enclosure of the corresponding real computation.
struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational a, Rational b);
    static RatInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool is_positive() const { return lo.sign() > 0; }
    bool is_negative() const { return hi.sign() < 0; }

    // Intersection; both must contain the same true value for this to be sound.
    RatInterval meet(const RatInterval& o) const;

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator+(const RatInterval& a, const Rational& b);
RatInterval operator-(const RatInterval& a, const Rational& b);
RatInterval operator*(const Rational& s, const RatInterval& a);
RatInterval operator/(const RatInterval& a, const RatInterval& b); // b must not contain 0

RatInterval abs(const RatInterval& a);
RatInterval max(const RatInterval& a, const RatInterval& b);
RatInterval max(const RatInterval& a, const Rational& b);
RatInterval pow_int(const RatInterval& a, long e); // a > 0 required for e < 0

/// e^x to absolute width <= eps; exp(0) is exactly [1,1]. Refining eps yields
/// nested intervals for the same x.
RatInterval exp_enclosure(const Rational& x, const Rational& eps);

/// ln(x) for x > 0 to absolute width <= eps; log(1) is exactly [0,0].
RatInterval log_enclosure(const Rational& x, const Rational& eps);

/// sqrt(x) for x >= 0 to absolute width <= eps; exact on perfect squares.
RatInterval sqrt_enclosure(const Rational& x, const Rational& eps);

// Monotone image hulls: contain { f(t) : t in a }, fattened by at most eps.
RatInterval exp_of(const RatInterval& a, const Rational& eps);
RatInterval log_of(const RatInterval& a, const Rational& eps); // a.lo > 0
RatInterval sqrt_of(const RatInterval& a, const Rational& eps); // a.lo >= 0

/// a^b for a.lo > 0 via exp(b * log a).
RatInterval pow_of(const RatInterval& a, const RatInterval& b, const Rational& eps);

/// Directed decimal rendering: a string like "4.219998431e+7900" that is
/// guaranteed <= x (round_down) or >= x (round up). For display only; the
/// exact rational is the authoritative value.
std::string decimal_lower(const Rational& x, unsigned digits);
std::string decimal_upper(const Rational& x, unsigned digits);

enum class Tristate { yes, no, undecided };

/// Width floor below which comparisons give up and report undecided.
/// Default 10^-50; the PADE_CERTIFY_PRECISION_CAP environment variable
/// (a rational or "1e-N" string) overrides it.
Rational precision_cap();

/// Decides x <= y where both sides are produced at refinable precision.
/// `make` is called with successively halved eps until the intervals separate
/// or eps falls below the cap.
template <typename Make>
Tristate decide_leq(Make make, Rational eps = pow10(-10)) {
    const Rational cap = precision_cap();
    for (;;) {
        auto [x, y] = make(eps);
        if (x.hi <= y.lo) return Tristate::yes;
        if (x.lo > y.hi) return Tristate::no;
        if (eps < cap) return Tristate::undecided;
        eps = eps / Rational(2);
    }
}

} // namespace pade

#endif
