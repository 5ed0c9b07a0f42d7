#include "pade/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>

namespace pade {

RatInterval::RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::meet(const RatInterval& o) const {
    Rational l = std::max(lo, o.lo);
    Rational h = std::min(hi, o.hi);
    if (l > h) throw std::logic_error("RatInterval::meet: disjoint intervals");
    return {l, h};
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
RatInterval operator+(const RatInterval& a, const Rational& b) { return {a.lo + b, a.hi + b}; }
RatInterval operator-(const RatInterval& a, const Rational& b) { return {a.lo - b, a.hi - b}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator*(const Rational& s, const RatInterval& a) {
    return s.sign() >= 0 ? RatInterval{s * a.lo, s * a.hi} : RatInterval{s * a.hi, s * a.lo};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains(Rational(0))) throw std::domain_error("RatInterval: division by interval containing 0");
    return a * RatInterval{b.hi.reciprocal(), b.lo.reciprocal()};
}

RatInterval abs(const RatInterval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return -a;
    return {Rational(0), std::max(-a.lo, a.hi)};
}

RatInterval max(const RatInterval& a, const RatInterval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval max(const RatInterval& a, const Rational& b) {
    return {std::max(a.lo, b), std::max(a.hi, b)};
}

RatInterval pow_int(const RatInterval& a, long e) {
    if (e < 0) {
        if (a.contains(Rational(0))) throw std::domain_error("pow_int: negative power of interval containing 0");
        return pow_int(RatInterval{a.hi.reciprocal(), a.lo.reciprocal()}, -e);
    }
    if (e == 0) return RatInterval::point(Rational(1));
    // Even powers of sign-crossing intervals are clamped at 0.
    if (e % 2 == 0 && a.lo.sign() < 0 && a.hi.sign() > 0) {
        Rational m = std::max(-a.lo, a.hi);
        return {Rational(0), pow(m, e)};
    }
    Rational plo = pow(a.lo, e), phi = pow(a.hi, e);
    return {std::min(plo, phi), std::max(plo, phi)};
}

namespace {

// Exact conversion of a finite mpfr value (mantissa * 2^exp) to a Rational.
Rational mpfr_to_rational(mpfr_srcptr f) {
    if (mpfr_zero_p(f)) return Rational(0);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f);
    if (e >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        return Rational(Int(m * p));
    }
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    return Rational(m, p);
}

// Rough bit count of -log2(eps), used to seed the precision ladder.
long eps_bits(const Rational& eps) {
    long d = static_cast<long>(mpz_sizeinbase(eps.denominator().get_mpz_t(), 2));
    long n = static_cast<long>(mpz_sizeinbase(eps.numerator().get_mpz_t(), 2));
    return std::max(1L, d - n + 1);
}

using mpfr_unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Directed evaluation of a monotone increasing function at a rational point.
// Precision doubles until the enclosure width drops below eps; running
// intersection makes results for smaller eps nest inside earlier ones.
RatInterval directed_enclosure(mpfr_unary fn, const Rational& x, const Rational& eps, long seed_bits) {
    mpfr_prec_t prec = std::max(64L, seed_bits);
    mpfr_t in_lo, in_hi, out_lo, out_hi;
    bool have = false;
    RatInterval acc;
    for (int round = 0; round < 64; ++round) {
        mpfr_inits2(prec, in_lo, in_hi, out_lo, out_hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_q(in_lo, x.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(in_hi, x.raw().get_mpq_t(), MPFR_RNDU);
        fn(out_lo, in_lo, MPFR_RNDD);
        fn(out_hi, in_hi, MPFR_RNDU);
        RatInterval cur{mpfr_to_rational(out_lo), mpfr_to_rational(out_hi)};
        mpfr_clears(in_lo, in_hi, out_lo, out_hi, static_cast<mpfr_ptr>(nullptr));
        acc = have ? acc.meet(cur) : cur;
        have = true;
        if (acc.width() <= eps) return acc;
        prec *= 2;
    }
    throw std::runtime_error("directed_enclosure: precision ladder exhausted");
}

} // namespace

RatInterval exp_enclosure(const Rational& x, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("exp_enclosure: eps must be positive");
    if (x.is_zero()) return RatInterval::point(Rational(1));
    // A large positive argument adds about x/ln 2 bits of integer part; a
    // large negative one needs nothing extra.
    double xd = mpq_get_d(x.raw().get_mpq_t());
    long mag = (xd > 0 && xd < 1e18) ? static_cast<long>(xd * 1.4427) + 2 : 0;
    return directed_enclosure(mpfr_exp, x, eps, 64 + eps_bits(eps) + mag);
}

RatInterval log_enclosure(const Rational& x, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("log_enclosure: eps must be positive");
    if (x.sign() <= 0) throw std::domain_error("log_enclosure: x must be positive");
    if (x == Rational(1)) return RatInterval::point(Rational(0));
    return directed_enclosure(mpfr_log, x, eps, 64 + eps_bits(eps));
}

RatInterval sqrt_enclosure(const Rational& x, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("sqrt_enclosure: eps must be positive");
    if (x.sign() < 0) throw std::domain_error("sqrt_enclosure: x must be nonnegative");
    if (x.is_zero()) return RatInterval::point(Rational(0));
    Int n = x.numerator(), d = x.denominator();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return RatInterval::point(Rational(rn, rd));
    }
    return directed_enclosure(mpfr_sqrt, x, eps, 64 + eps_bits(eps));
}

RatInterval exp_of(const RatInterval& a, const Rational& eps) {
    return {exp_enclosure(a.lo, eps).lo, exp_enclosure(a.hi, eps).hi};
}

RatInterval log_of(const RatInterval& a, const Rational& eps) {
    return {log_enclosure(a.lo, eps).lo, log_enclosure(a.hi, eps).hi};
}

RatInterval sqrt_of(const RatInterval& a, const Rational& eps) {
    return {sqrt_enclosure(a.lo, eps).lo, sqrt_enclosure(a.hi, eps).hi};
}

RatInterval pow_of(const RatInterval& a, const RatInterval& b, const Rational& eps) {
    if (a.lo.sign() <= 0) throw std::domain_error("pow_of: base must be positive");
    return exp_of(b * log_of(a, eps), eps);
}

namespace {

std::string directed_decimal(const Rational& x, unsigned digits, mpfr_rnd_t rnd) {
    if (x.is_zero()) return "0";
    if (digits == 0) digits = 1;
    mpfr_t f;
    mpfr_init2(f, static_cast<mpfr_prec_t>(digits * 4 + 64));
    mpfr_set_q(f, x.raw().get_mpq_t(), rnd);
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, f, rnd);
    std::string mant(raw);
    mpfr_free_str(raw);
    mpfr_clear(f);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "") + body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace

std::string decimal_lower(const Rational& x, unsigned digits) { return directed_decimal(x, digits, MPFR_RNDD); }
std::string decimal_upper(const Rational& x, unsigned digits) { return directed_decimal(x, digits, MPFR_RNDU); }

namespace {

std::optional<Rational> parse_tolerance(const char* s) {
    std::string_view v(s);
    auto e = v.find_first_of("eE");
    if (e == std::string_view::npos) return Rational::parse(v);
    auto mant = Rational::parse(v.substr(0, e));
    std::string expo(v.substr(e + 1));
    if (!mant || expo.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    long k = std::strtol(expo.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0') return std::nullopt;
    return *mant * pow10(k);
}

} // namespace

Rational precision_cap() {
    static const Rational cap = [] {
        if (const char* s = std::getenv("PADE_CERTIFY_PRECISION_CAP")) {
            if (auto r = parse_tolerance(s); r && r->sign() > 0) return *r;
        }
        return pow10(-50);
    }();
    return cap;
}

} // namespace pade
