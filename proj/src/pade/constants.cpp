#include "pade/constants.hpp"

namespace pade {

namespace {

RatInterval half(const RatInterval& x) { return Rational(Int(1), Int(2)) * x; }

} // namespace

BoundConstants compute_constants(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b, int m,
                                 const Rational& eps) {
    if (b.is_zero()) throw std::invalid_argument("compute_constants: zero denominator point");
    if (a.is_zero()) throw std::invalid_argument("compute_constants: alpha must be nonzero");
    if (m < 1) throw std::invalid_argument("compute_constants: m must be positive");

    BoundConstants c;
    c.R = cfg.R;
    c.S = cfg.S;
    c.Rhat = cfg.Rhat;
    c.Shat = cfg.Shat;
    c.m = m;
    c.eps = eps;

    const Rational alpha_sq = a.abs_squared() / b.abs_squared();
    c.abs_alpha = sqrt_enclosure(alpha_sq, eps);
    c.abs_b = sqrt_enclosure(b.abs_squared(), eps);

    const RatInterval log2 = log_enclosure(Rational(2), eps);
    const RatInterval logS = log_enclosure(Rational(cfg.S), eps);
    const RatInterval log_b = half(log_enclosure(b.abs_squared(), eps));
    const RatInterval logA = half(log_enclosure(std::max(Rational(1), alpha_sq), eps));

    const Rational R(cfg.R), S(cfg.S);
    const Rational ml(static_cast<long>(m));

    c.c1 = RatInterval::point(Rational(6) * R * (ml + Rational(1))) + Rational(2) * c.abs_alpha;
    c.c2 = Rational(3) * log2 + Rational(3) * logS + RatInterval::point(Rational(6) * S * (ml + Rational(3)));
    c.c3 = log_b + RatInterval::point(Rational(12) * R * (Rational(1) + S * ml));
    c.c4 = log_b + Rational(2) * (ml + Rational(1)) * logS + RatInterval::point(Rational(6) * S * (Rational(3) + S * ml));
    c.c5 = c.c1 + c.c3 + log2 + Rational(2) * (S * S - Rational(1)) * c.abs_alpha;
    c.c6 = c.c2 + c.c4 + Rational(3) * log2 + Rational(4) * logS + Rational(2) * logA;

    c.b1hat = c.c2 + c.c4 + Rational(1);
    c.b1 = c.b1hat + Rational(1);
    c.b3 = c.c1 + c.c3;
    c.e1hat = c.c6;
    c.e1 = c.e1hat + Rational(1);
    c.e3 = c.c5;
    c.N2 = max(c.b3, c.e3);
    return c;
}

DConstants compute_d_constants(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b,
                               const Rational& eps) {
    if (b.is_zero()) throw std::invalid_argument("compute_d_constants: zero denominator point");
    if (a.is_zero()) throw std::invalid_argument("compute_d_constants: alpha must be nonzero");

    const Rational alpha_sq = a.abs_squared() / b.abs_squared();
    const RatInterval log2 = log_enclosure(Rational(2), eps);
    const RatInterval logS = log_enclosure(Rational(cfg.S), eps);
    const RatInterval log_b = half(log_enclosure(b.abs_squared(), eps));
    const RatInterval logA = half(log_enclosure(std::max(Rational(1), alpha_sq), eps));
    const Rational S(cfg.S);

    DConstants d;
    d.d0 = RatInterval::point(Rational(3) + Rational(36) * S) + Rational(3) * log2 + Rational(5) * logS + log_b;
    d.d1 = RatInterval::point(Rational(1) + Rational(36) * S) + Rational(6) * log2 + Rational(9) * logS + log_b +
           Rational(2) * logA;
    d.d2 = Rational(2) * logS + RatInterval::point(Rational(6) * S + Rational(6) * S * S);
    return d;
}

} // namespace pade
