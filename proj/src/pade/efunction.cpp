#include "pade/efunction.hpp"

namespace pade {

LambdaConfig validate_config(std::vector<Rational> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("validate_config: at least one parameter required");
    const int m = static_cast<int>(lambdas.size());
    for (int j = 0; j < m; ++j) {
        if (lambdas[static_cast<size_t>(j)].is_negative_integer())
            throw ValidationError(ValidationError::Kind::negative_integer_lambda, j + 1, 0,
                                  "lambda_" + std::to_string(j + 1) + " = " +
                                      lambdas[static_cast<size_t>(j)].str() + " is a negative integer");
    }
    LambdaConfig cfg;
    cfg.R = 0;
    cfg.S = 1;
    cfg.Rhat = 0;
    cfg.Shat = 0;
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < k; ++j) {
            Rational diff = lambdas[static_cast<size_t>(k)] - lambdas[static_cast<size_t>(j)];
            if (diff.is_integer())
                throw ValidationError(ValidationError::Kind::integer_difference, k + 1, j + 1,
                                      "lambda_" + std::to_string(k + 1) + " - lambda_" + std::to_string(j + 1) +
                                          " = " + diff.str() + " is an integer");
            cfg.Rhat = std::max(cfg.Rhat, Int(::abs(diff.numerator())));
            cfg.Shat = std::max(cfg.Shat, diff.denominator());
        }
    }
    for (const Rational& l : lambdas) {
        cfg.R = std::max(cfg.R, Int(::abs(l.numerator())));
        cfg.S = std::max(cfg.S, l.denominator());
    }
    if (m >= 2) {
        if (cfg.Rhat > 2 * cfg.R * cfg.S || cfg.Shat > cfg.S * cfg.S)
            throw std::logic_error("validate_config: difference statistics out of range");
    }
    cfg.lambdas = std::move(lambdas);
    return cfg;
}

Rational phi_coefficient(const Rational& lambda, unsigned long nu) {
    return bracket_factorial(lambda, nu).reciprocal();
}

ComplexEnclosure phi_enclosure(const Rational& lambda, const QuadRational& alpha, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("phi_enclosure: eps must be positive");
    if (alpha.is_zero()) {
        return {RatInterval::point(Rational(1)), RatInterval::point(Rational(0))};
    }

    // Tail majorant: |1/[nu]| <= (2 s^2)^nu / nu! with s the denominator of
    // lambda, so the tail beyond M is at most x^(M+1)/(M+1)! * e^x with
    // x = 2 s^2 * |alpha| (|alpha| replaced by a rational upper bound).
    const Rational s(lambda.denominator());
    const Rational A = sqrt_enclosure(alpha.abs_squared(), Rational(Int(1), Int(1000))).hi;
    const Rational x = Rational(2) * s.squared() * A;
    const Rational exp_x_hi = exp_enclosure(x, Rational(1)).hi;
    const Rational half_eps = eps / Rational(2);

    QuadRational sum(Rational(1));
    QuadRational power = alpha.d == 0 ? QuadRational(Rational(1)) : QuadRational(alpha.d, Rational(1), Rational(0));
    Rational bracket(1);
    Rational term = x; // x^(nu+1) / (nu+1)! at nu = 0

    const bool real_point = alpha.im.is_zero();
    ComplexEnclosure box;
    bool have_box = false;
    unsigned long nu = 0;
    for (;;) {
        Rational tail = term * exp_x_hi;
        ComplexEnclosure cur = ComplexEnclosure::of(sum, eps / Rational(8));
        cur.re = RatInterval{cur.re.lo - tail, cur.re.hi + tail};
        if (!real_point) cur.im = RatInterval{cur.im.lo - tail, cur.im.hi + tail};
        // Running intersection keeps refinements nested and never loses truth.
        box = have_box ? ComplexEnclosure{box.re.meet(cur.re), box.im.meet(cur.im)} : cur;
        have_box = true;
        if (tail <= half_eps && box.re.width() <= eps && box.im.width() <= eps) break;
        ++nu;
        power = power * alpha;
        bracket *= lambda + Rational(Int(static_cast<long>(nu)));
        sum = sum + bracket.reciprocal() * power;
        term *= x / Rational(Int(static_cast<long>(nu + 1)));
    }
    return box;
}

} // namespace pade
