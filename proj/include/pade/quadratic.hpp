#ifndef PADE_QUADRATIC_HPP
#define PADE_QUADRATIC_HPP

#include "pade/interval.hpp"
#include "pade/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pade {

/// Algebraic integer of Q or of an imaginary quadratic field Q(sqrt(-d)).
/// The value is x + y*w with w = sqrt(-d), or w = (1+sqrt(-d))/2 when the
/// half-integer basis is selected (permitted only for d = 3 mod 4).
/// d == 0 encodes plain rational integers and forces y = 0.
class QuadraticInt {
public:
    QuadraticInt() : d_(0), x_(0), y_(0), half_(false) {}
    QuadraticInt(long x) : d_(0), x_(x), y_(0), half_(false) {}
    QuadraticInt(Int x) : d_(0), x_(std::move(x)), y_(0), half_(false) {}
    QuadraticInt(unsigned long d, Int x, Int y, bool half_basis = false);

    unsigned long d() const { return d_; }
    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    bool half_basis() const { return half_; }

    bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
    bool is_rational_integer() const { return sgn(y_) == 0; }

    /// |z|^2, exact. Nonnegative, zero iff z = 0.
    Rational abs_squared() const;

    QuadraticInt conj() const;

    // Coordinates over the basis {1, i*sqrt(d)}: value = first + second*i*sqrt(d).
    Rational real_coordinate() const;
    Rational imag_coordinate() const;

    friend QuadraticInt operator+(const QuadraticInt& a, const QuadraticInt& b);
    friend QuadraticInt operator-(const QuadraticInt& a, const QuadraticInt& b);
    friend QuadraticInt operator*(const QuadraticInt& a, const QuadraticInt& b);
    friend QuadraticInt operator-(const QuadraticInt& a);
    friend bool operator==(const QuadraticInt& a, const QuadraticInt& b);

    QuadraticInt pow(unsigned long e) const;

    std::string str() const;

private:
    unsigned long d_;
    Int x_, y_;
    bool half_;

    // Fails unless the fields match; d == 0 values promote into any field.
    static std::pair<QuadraticInt, QuadraticInt> align(const QuadraticInt& a, const QuadraticInt& b);
};

bool is_squarefree(unsigned long n);

/// Exact element of K = Q(sqrt(-d)): re + im*sqrt(-d) with rational
/// coordinates. d == 0 forces im = 0. This is the scalar for evaluating
/// polynomials and series at points of K.
struct QuadRational {
    unsigned long d = 0;
    Rational re, im;

    QuadRational() = default;
    QuadRational(Rational r) : d(0), re(std::move(r)), im(0) {}
    QuadRational(unsigned long d_, Rational re_, Rational im_);

    static QuadRational from(const QuadraticInt& z);
    /// a/b, exact field division. b must be nonzero.
    static QuadRational ratio(const QuadraticInt& a, const QuadraticInt& b);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Rational abs_squared() const { return re.squared() + Rational(static_cast<long>(d)) * im.squared(); }
    QuadRational conj() const { return {d, re, -im}; }

    /// Membership test for the ring of integers of Q(sqrt(-d)) (maximal
    /// order: half-integer coordinates are integral when d = 3 mod 4).
    bool is_algebraic_integer() const;

    friend QuadRational operator+(const QuadRational& a, const QuadRational& b);
    friend QuadRational operator-(const QuadRational& a, const QuadRational& b);
    friend QuadRational operator*(const QuadRational& a, const QuadRational& b);
    friend QuadRational operator*(const Rational& s, const QuadRational& a);
    friend bool operator==(const QuadRational& a, const QuadRational& b);

    std::string str() const;

private:
    static std::pair<QuadRational, QuadRational> align(const QuadRational& a, const QuadRational& b);
};

/// Rectangular enclosure of a complex number: real and imaginary parts as
/// rational intervals. No floating complex type exists anywhere; a real value
/// simply has im = [0,0].
struct ComplexEnclosure {
    RatInterval re, im;

    ComplexEnclosure() : re(RatInterval::point(Rational(0))), im(RatInterval::point(Rational(0))) {}
    ComplexEnclosure(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}

    /// Box around an exact field element; sqrt(d) is enclosed to width eps.
    static ComplexEnclosure of(const QuadRational& z, const Rational& eps);

    /// Fattens both parts by r, enclosing any perturbation of modulus <= r.
    ComplexEnclosure widened(const Rational& r) const;

    RatInterval abs_squared() const { return pow_int(re, 2) + pow_int(im, 2); }
    bool contains_zero() const { return re.contains(Rational(0)) && im.contains(Rational(0)); }

    friend ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b);
    friend ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b);
};

/// Parses an element of Z_K: "3", "-2", "i", "2i", "3+2i", "1-i", "2w",
/// "1+w". The token w denotes the basis element for the given field
/// (sqrt(-d), or (1+sqrt(-d))/2 when d = 3 mod 4); i is accepted for d = 1.
std::optional<QuadraticInt> parse_quadratic_int(std::string_view s, unsigned long d);

/// Parses alpha = a/b with a, b in Z_K: "p/q", "i", "(1+i)/2", "2".
std::optional<std::pair<QuadraticInt, QuadraticInt>> parse_quadratic_ratio(std::string_view s, unsigned long d);

} // namespace pade

#endif
