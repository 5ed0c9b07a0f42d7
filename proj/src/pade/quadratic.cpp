#include "pade/quadratic.hpp"

#include <algorithm>
#include <vector>

namespace pade {

bool is_squarefree(unsigned long n) {
    if (n == 0) return false;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

QuadraticInt::QuadraticInt(unsigned long d, Int x, Int y, bool half_basis)
    : d_(d), x_(std::move(x)), y_(std::move(y)), half_(half_basis) {
    if (d_ == 0) {
        if (sgn(y_) != 0) throw std::invalid_argument("QuadraticInt: d = 0 requires y = 0");
        half_ = false;
        return;
    }
    if (!is_squarefree(d_)) throw std::invalid_argument("QuadraticInt: d must be squarefree");
    if (half_ && d_ % 4 != 3) throw std::invalid_argument("QuadraticInt: half basis requires d = 3 mod 4");
}

Rational QuadraticInt::real_coordinate() const {
    if (!half_) return Rational(x_);
    return Rational(x_) + Rational(y_, Int(2));
}

Rational QuadraticInt::imag_coordinate() const {
    if (d_ == 0) return Rational(0);
    if (!half_) return Rational(y_);
    return Rational(y_, Int(2));
}

Rational QuadraticInt::abs_squared() const {
    Rational u = real_coordinate(), v = imag_coordinate();
    return u.squared() + Rational(Int(static_cast<long>(d_))) * v.squared();
}

QuadraticInt QuadraticInt::conj() const {
    if (d_ == 0) return *this;
    if (!half_) return {d_, x_, -y_, false};
    // conj(x + y(1+s)/2) = (x+y) - y(1+s)/2 with s = sqrt(-d)
    return {d_, x_ + y_, -y_, true};
}

std::pair<QuadraticInt, QuadraticInt> QuadraticInt::align(const QuadraticInt& a, const QuadraticInt& b) {
    auto promote = [](const QuadraticInt& z, const QuadraticInt& like) {
        return QuadraticInt(like.d_, z.x_, Int(0), like.half_);
    };
    if (a.d_ == b.d_ && a.half_ == b.half_) return {a, b};
    if (a.d_ == 0) return {promote(a, b), b};
    if (b.d_ == 0) return {a, promote(b, a)};
    throw std::invalid_argument("QuadraticInt: mixed fields or bases");
}

QuadraticInt operator+(const QuadraticInt& a, const QuadraticInt& b) {
    auto [p, q] = QuadraticInt::align(a, b);
    return {p.d_, p.x_ + q.x_, p.y_ + q.y_, p.half_};
}

QuadraticInt operator-(const QuadraticInt& a, const QuadraticInt& b) {
    auto [p, q] = QuadraticInt::align(a, b);
    return {p.d_, p.x_ - q.x_, p.y_ - q.y_, p.half_};
}

QuadraticInt operator-(const QuadraticInt& a) {
    return {a.d_, -a.x_, -a.y_, a.half_};
}

QuadraticInt operator*(const QuadraticInt& a, const QuadraticInt& b) {
    auto [p, q] = QuadraticInt::align(a, b);
    Int dd(static_cast<long>(p.d_));
    if (!p.half_) {
        // w^2 = -d
        return {p.d_, p.x_ * q.x_ - dd * p.y_ * q.y_, p.x_ * q.y_ + p.y_ * q.x_, false};
    }
    // w = (1+sqrt(-d))/2 satisfies w^2 = w - (d+1)/4
    Int c = (dd + 1) / 4;
    return {p.d_, p.x_ * q.x_ - c * p.y_ * q.y_, p.x_ * q.y_ + p.y_ * q.x_ + p.y_ * q.y_, true};
}

bool operator==(const QuadraticInt& a, const QuadraticInt& b) {
    return a.real_coordinate() == b.real_coordinate() && a.imag_coordinate() == b.imag_coordinate() &&
           (a.d_ == b.d_ || a.is_rational_integer() || b.is_rational_integer());
}

QuadraticInt QuadraticInt::pow(unsigned long e) const {
    QuadraticInt acc(Int(1));
    QuadraticInt base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string QuadraticInt::str() const {
    if (is_rational_integer()) return x_.get_str();
    std::string w = d_ == 1 ? "i" : "w";
    std::string s = x_.get_str();
    if (sgn(y_) >= 0) s += "+";
    s += y_.get_str() + w;
    return s;
}

QuadRational::QuadRational(unsigned long d_, Rational re_, Rational im_)
    : d(d_), re(std::move(re_)), im(std::move(im_)) {
    if (d == 0 && !im.is_zero()) throw std::invalid_argument("QuadRational: d = 0 requires im = 0");
}

QuadRational QuadRational::from(const QuadraticInt& z) {
    return {z.d(), z.real_coordinate(), z.imag_coordinate()};
}

QuadRational QuadRational::ratio(const QuadraticInt& a, const QuadraticInt& b) {
    if (b.is_zero()) throw std::invalid_argument("QuadRational: zero denominator");
    QuadRational an = from(a), bn = from(b);
    auto [p, q] = align(an, bn);
    Rational n2 = q.abs_squared();
    QuadRational prod = p * q.conj();
    return {prod.d, prod.re / n2, prod.im / n2};
}

std::pair<QuadRational, QuadRational> QuadRational::align(const QuadRational& a, const QuadRational& b) {
    if (a.d == b.d) return {a, b};
    if (a.d == 0 && a.im.is_zero()) return {QuadRational(b.d, a.re, Rational(0)), b};
    if (b.d == 0 && b.im.is_zero()) return {a, QuadRational(a.d, b.re, Rational(0))};
    throw std::invalid_argument("QuadRational: mixed fields");
}

QuadRational operator+(const QuadRational& a, const QuadRational& b) {
    auto [p, q] = QuadRational::align(a, b);
    return {p.d, p.re + q.re, p.im + q.im};
}

QuadRational operator-(const QuadRational& a, const QuadRational& b) {
    auto [p, q] = QuadRational::align(a, b);
    return {p.d, p.re - q.re, p.im - q.im};
}

QuadRational operator*(const QuadRational& a, const QuadRational& b) {
    auto [p, q] = QuadRational::align(a, b);
    Rational dd(static_cast<long>(p.d));
    return {p.d, p.re * q.re - dd * p.im * q.im, p.re * q.im + p.im * q.re};
}

QuadRational operator*(const Rational& s, const QuadRational& a) {
    return {a.d, s * a.re, s * a.im};
}

bool operator==(const QuadRational& a, const QuadRational& b) {
    return a.re == b.re && a.im == b.im && (a.d == b.d || a.im.is_zero());
}

bool QuadRational::is_algebraic_integer() const {
    if (im.is_zero()) return re.is_integer();
    if (d % 4 == 3) {
        // x + y(1+sqrt(-d))/2 with x, y in Z: y = 2 im, x = re - im must be integral.
        return (Rational(2) * im).is_integer() && (re - im).is_integer();
    }
    return re.is_integer() && im.is_integer();
}

std::string QuadRational::str() const {
    if (is_real()) return re.str();
    std::string s = re.str();
    if (im.sign() >= 0) s += "+";
    return s + im.str() + (d == 1 ? "i" : ("*sqrt(-" + std::to_string(d) + ")"));
}

ComplexEnclosure ComplexEnclosure::of(const QuadRational& z, const Rational& eps) {
    RatInterval re = RatInterval::point(z.re);
    if (z.im.is_zero() || z.d == 0) return {re, RatInterval::point(Rational(0))};
    Rational scale = std::max(Rational(1), z.im.abs());
    RatInterval root = sqrt_enclosure(Rational(static_cast<long>(z.d)), eps / scale);
    return {re, z.im * root};
}

ComplexEnclosure ComplexEnclosure::widened(const Rational& r) const {
    if (r.sign() < 0) throw std::invalid_argument("ComplexEnclosure: negative widening");
    return {{re.lo - r, re.hi + r}, {im.lo - r, im.hi + r}};
}

ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

namespace {

// One additive term of a quadratic literal: an integer, optionally times
// i or w. Returns (coefficient, is_unit_term).
struct Term {
    Int coeff;
    bool unit; // multiplies the imaginary basis element
};

std::optional<std::vector<Term>> tokenize_terms(std::string_view s) {
    std::vector<Term> out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!out.empty()) {
            return std::nullopt; // terms after the first need explicit signs
        }
        std::string digits;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') digits += s[i++];
        bool unit = false;
        if (i < s.size() && (s[i] == 'i' || s[i] == 'w')) {
            unit = true;
            ++i;
        }
        if (digits.empty() && !unit) return std::nullopt;
        Int c = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) c = -c;
        out.push_back({c, unit});
    }
    return out.empty() ? std::nullopt : std::optional(out);
}

} // namespace

std::optional<QuadraticInt> parse_quadratic_int(std::string_view s, unsigned long d) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    auto terms = tokenize_terms(s);
    if (!terms) return std::nullopt;
    Int x(0), y(0);
    for (const auto& t : *terms) {
        if (t.unit) y += t.coeff;
        else x += t.coeff;
    }
    if (sgn(y) == 0) return QuadraticInt(x);
    if (d == 0) return std::nullopt;
    if (s.find('i') != std::string_view::npos && d != 1) return std::nullopt;
    bool half = s.find('w') != std::string_view::npos && d % 4 == 3;
    try {
        return QuadraticInt(d, x, y, half);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<std::pair<QuadraticInt, QuadraticInt>> parse_quadratic_ratio(std::string_view s, unsigned long d) {
    // Split on the top-level '/', respecting parentheses.
    int depth = 0;
    size_t slash = std::string_view::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            if (slash != std::string_view::npos) return std::nullopt;
            slash = i;
        }
    }
    auto num = parse_quadratic_int(slash == std::string_view::npos ? s : s.substr(0, slash), d);
    if (!num) return std::nullopt;
    QuadraticInt den(Int(1));
    if (slash != std::string_view::npos) {
        auto q = parse_quadratic_int(s.substr(slash + 1), d);
        if (!q || q->is_zero()) return std::nullopt;
        den = *q;
    }
    return std::pair{*num, den};
}

} // namespace pade
