#include "pade/baker.hpp"

namespace pade {

LinearForm LinearForm::create(std::vector<QuadraticInt> beta, QuadraticInt a, QuadraticInt b) {
    if (beta.size() < 2) throw std::invalid_argument("LinearForm: need at least beta_0 and beta_1");
    bool all_zero = true;
    for (const auto& z : beta)
        if (!z.is_zero()) all_zero = false;
    if (all_zero) throw std::invalid_argument("LinearForm: coefficient vector must be nonzero");
    if (b.is_zero()) throw std::invalid_argument("LinearForm: zero denominator point");
    if (a.is_zero()) throw std::invalid_argument("LinearForm: alpha must be nonzero");
    LinearForm f;
    f.beta = std::move(beta);
    f.alpha_num = std::move(a);
    f.alpha_den = std::move(b);
    return f;
}

Rational LinearForm::h_squared(int j) const {
    if (j < 1 || j > m()) throw std::invalid_argument("LinearForm: h index out of range");
    return std::max(Rational(1), beta[static_cast<size_t>(j)].abs_squared());
}

Rational LinearForm::H_squared() const {
    Rational acc(1);
    for (int j = 1; j <= m(); ++j) acc *= h_squared(j);
    return acc;
}

RatInterval LinearForm::log_H(const Rational& eps) const {
    return Rational(Int(1), Int(2)) * log_enclosure(H_squared(), eps);
}

RatInterval LinearForm::log_H_hat(const Rational& eps) const {
    const long mm = m();
    return Rational(mm) * log_enclosure(Rational(2 * mm), eps) + log_H(eps);
}

namespace {

// g(y) = y - 2 e1 m - 2 e1 m^2 e^(-y); increasing in y, so the defining
// equation x log x = 2 e1 m (x + m) has exactly one root x = e^y with y > 0.
RatInterval eval_root_function(const RatInterval& e1, long m, const Rational& y) {
    RatInterval expneg = exp_enclosure(-y, pow10(-25));
    RatInterval rhs = Rational(2 * m) * e1 + Rational(2 * m * m) * (e1 * expneg);
    return RatInterval::point(y) - rhs;
}

} // namespace

RatInterval solve_x2(const RatInterval& e1, int m) {
    if (m < 1) throw std::invalid_argument("solve_x2: m must be positive");
    if (!(e1.lo.sign() > 0)) throw std::invalid_argument("solve_x2: e1 must be positive");

    Rational y_lo(0); // g(0) = -2 e1 m (1 + m) < 0
    Rational y_hi = Rational(2 * m) * e1.hi + Rational(2);
    int guard = 0;
    while (!eval_root_function(e1, m, y_hi).is_positive()) {
        y_hi += Rational(2);
        if (++guard > 64) throw NoBracketError("solve_x2: no sign change located");
    }

    const Rational target = pow10(-12);
    while (y_hi - y_lo > target) {
        Rational mid = (y_lo + y_hi) / Rational(2);
        RatInterval g = eval_root_function(e1, m, mid);
        if (g.is_positive()) y_hi = mid;
        else if (g.is_negative()) y_lo = mid;
        else break; // interval-valued e1 limits the resolvable width
    }

    RatInterval x{exp_enclosure(y_lo, pow10(-20)).lo, exp_enclosure(y_hi, pow10(-20)).hi};
    return max(x, Rational(1));
}

Tristate admissibility(const LinearForm& form, const BoundConstants& constants) {
    const int m = constants.m;
    RatInterval x2 = solve_x2(constants.e1, m);

    Rational eps = pow10(-12);
    const Rational cap = precision_cap();
    for (;;) {
        RatInterval lhs = Rational(2) * form.log_H_hat(eps);
        RatInterval rhs = Rational(2) * log_of(constants.N2, eps);
        rhs = max(rhs, x2 * log_of(x2, eps));
        rhs = max(rhs, exp_of(exp_enclosure(Rational(1), eps), eps));
        if (lhs.lo >= rhs.hi) return Tristate::yes;
        if (lhs.hi < rhs.lo) return Tristate::no;
        if (eps < cap) return Tristate::undecided;
        eps = eps / Rational(2);
    }
}

RatInterval corollary_bound(const LinearForm& form, const BoundConstants& constants, const Rational& eps) {
    const long m = constants.m;
    RatInterval log_hh = form.log_H_hat(eps);
    RatInterval e_val = exp_enclosure(Rational(1), eps);
    if (!(log_hh.lo > e_val.hi)) {
        if (log_hh.hi <= e_val.lo) throw DomainError("corollary_bound: requires H hat > e^e");
        // Not separated: refine once with much smaller eps before giving up.
        log_hh = form.log_H_hat(eps * pow10(-20));
        e_val = exp_enclosure(Rational(1), eps * pow10(-20));
        if (!(log_hh.lo > e_val.hi)) throw DomainError("corollary_bound: requires H hat > e^e");
    }
    RatInterval loglog_hh = log_of(log_hh, eps);

    RatInterval K = constants.b1 + Rational(m) * constants.e1 + Rational(1);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m) + 1);

    RatInterval front = Rational(Int(1), two_pow) * exp_of(-(Rational(m) * K), eps);
    RatInterval ratio = pow_int(loglog_hh / log_hh, m);
    RatInterval expo = (RatInterval::point(Rational(-1)) - (Rational(4) * K) / loglog_hh) * log_hh;
    return front * ratio * exp_of(expo, eps);
}

RatInterval theorem_bound(const LinearForm& form, const DConstants& d, const Rational& eps) {
    const long m = form.m();
    RatInterval log_h = form.log_H(eps);
    RatInterval e_val = exp_enclosure(Rational(1), eps);
    if (!(log_h.lo > e_val.hi)) {
        if (log_h.hi <= e_val.lo) throw DomainError("theorem_bound: requires H > e^e");
        log_h = form.log_H(eps * pow10(-20));
        e_val = exp_enclosure(Rational(1), eps * pow10(-20));
        if (!(log_h.lo > e_val.hi)) throw DomainError("theorem_bound: requires H > e^e");
    }
    RatInterval loglog_h = log_of(log_h, eps);
    RatInterval D = d.d0 + Rational(m) * d.d1 + Rational(m * m) * d.d2;
    RatInterval expo = (RatInterval::point(Rational(-1)) - (Rational(6) * D) / loglog_h) * log_h;
    return exp_of(expo, eps);
}

ComplexEnclosure evaluate_linear_form(const LinearForm& form, const LambdaConfig& cfg, const Rational& eps) {
    if (form.m() != cfg.m()) throw std::invalid_argument("evaluate_linear_form: size mismatch");
    const QuadRational alpha = QuadRational::ratio(form.alpha_num, form.alpha_den);
    const Rational budget = eps / Rational(form.m() + 1);

    ComplexEnclosure acc = ComplexEnclosure::of(QuadRational::from(form.beta[0]), budget);
    for (int j = 1; j <= form.m(); ++j) {
        const QuadraticInt& bj = form.beta[static_cast<size_t>(j)];
        Rational beta_mag = sqrt_enclosure(bj.abs_squared(), Rational(Int(1), Int(16))).hi + Rational(1);
        ComplexEnclosure phi = phi_enclosure(cfg.lambda(j), alpha, budget / (Rational(2) * beta_mag));
        Rational phi_mag = std::max(std::max(phi.re.lo.abs(), phi.re.hi.abs()),
                                    std::max(phi.im.lo.abs(), phi.im.hi.abs())) +
                           Rational(1);
        ComplexEnclosure beta_box = ComplexEnclosure::of(QuadRational::from(bj), budget / (Rational(4) * phi_mag));
        acc = acc + beta_box * phi;
    }
    return acc;
}

BoundReport certify_form(const LinearForm& form, const LambdaConfig& cfg, const Rational& eps) {
    if (form.m() != cfg.m()) throw std::invalid_argument("certify_form: size mismatch");
    BoundReport rep;
    rep.constants = compute_constants(cfg, form.alpha_num, form.alpha_den, cfg.m(), eps);
    rep.d = compute_d_constants(cfg, form.alpha_num, form.alpha_den, eps);
    rep.x2 = solve_x2(rep.constants.e1, cfg.m());
    rep.admissible = admissibility(form, rep.constants);

    try {
        rep.corollary = corollary_bound(form, rep.constants, eps);
        rep.have_corollary = true;
    } catch (const DomainError&) {
        rep.have_corollary = false;
    }
    try {
        rep.theorem = theorem_bound(form, rep.d, eps);
        rep.have_theorem = true;
    } catch (const DomainError&) {
        rep.have_theorem = false;
    }

    rep.value = evaluate_linear_form(form, cfg, eps);
    rep.value_abs_squared = rep.value.abs_squared();

    rep.comparison_empirical = rep.admissible != Tristate::yes;
    if (rep.have_theorem) {
        Rational e = eps;
        const Rational cap = precision_cap();
        for (;;) {
            ComplexEnclosure v = evaluate_linear_form(form, cfg, e);
            RatInterval v2 = v.abs_squared();
            RatInterval t2 = pow_int(theorem_bound(form, rep.d, e), 2);
            if (v2.lo > t2.hi) {
                rep.comparison = Tristate::yes;
                break;
            }
            if (v2.hi < t2.lo) {
                rep.comparison = Tristate::no;
                break;
            }
            if (e < cap) {
                rep.comparison = Tristate::undecided;
                break;
            }
            e = e / Rational(2);
        }
    }

    const long m = cfg.m();
    rep.identity_lhs = RatInterval::point(Rational(1)) + rep.constants.b1 + Rational(m) * rep.constants.e1;
    rep.identity_rhs = rep.d.d0 + Rational(m) * rep.d.d1 + Rational(m * m) * rep.d.d2;
    rep.identity_overlap = rep.identity_lhs.intersects(rep.identity_rhs);
    return rep;
}

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("SplitMix64: bad range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

StressSummary stress_run(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b, unsigned long trials,
                         std::uint64_t seed, long box, unsigned long field_d) {
    if (box < 1) throw std::invalid_argument("stress_run: box must be positive");
    StressSummary sum;
    sum.trials = trials;
    sum.seed = seed;
    sum.box = box;

    const int m = cfg.m();
    const QuadRational alpha = QuadRational::ratio(a, b);
    const Rational eps = pow10(-30);

    std::vector<ComplexEnclosure> phi(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
        phi[static_cast<size_t>(j - 1)] = phi_enclosure(cfg.lambda(j), alpha, eps);

    const DConstants d = compute_d_constants(cfg, a, b, pow10(-15));
    const RatInterval ee = exp_of(exp_enclosure(Rational(1), pow10(-20)), pow10(-20)); // e^e
    const Rational ee2_hi = (ee * ee).hi;
    const Rational ee2_lo = (ee * ee).lo;

    SplitMix64 rng{seed};
    const bool half = field_d != 0 && field_d % 4 == 3;

    Rational min_ratio2;
    bool have_min = false;

    for (unsigned long t = 0; t < trials; ++t) {
        std::vector<QuadraticInt> beta;
        bool all_zero = true;
        do {
            beta.clear();
            all_zero = true;
            for (int j = 0; j <= m; ++j) {
                long x = rng.uniform(-box, box);
                long y = field_d == 0 ? 0 : rng.uniform(-box, box);
                QuadraticInt z = field_d == 0 ? QuadraticInt(Int(x)) : QuadraticInt(field_d, Int(x), Int(y), half);
                if (!z.is_zero()) all_zero = false;
                beta.push_back(std::move(z));
            }
        } while (all_zero);

        LinearForm form = LinearForm::create(beta, a, b);
        const Rational H2 = form.H_squared();
        if (H2 <= ee2_hi) {
            if (H2 < ee2_lo) ++sum.skipped_small_h;
            else ++sum.undecided;
            continue;
        }

        RatInterval bound = theorem_bound(form, d, pow10(-15));
        RatInterval bound2 = pow_int(bound, 2);

        ComplexEnclosure value = ComplexEnclosure::of(QuadRational::from(form.beta[0]), eps);
        for (int j = 1; j <= m; ++j) {
            ComplexEnclosure bj = ComplexEnclosure::of(QuadRational::from(form.beta[static_cast<size_t>(j)]), eps);
            value = value + bj * phi[static_cast<size_t>(j - 1)];
        }
        RatInterval v2 = value.abs_squared();

        if (value.contains_zero()) ++sum.zero_enclosures;
        if (v2.hi < bound2.lo) {
            ++sum.violations;
        } else if (v2.lo > bound2.hi) {
            Rational r2 = v2.lo / bound2.hi;
            if (!have_min || r2 < min_ratio2) {
                min_ratio2 = r2;
                have_min = true;
            }
        } else {
            ++sum.undecided;
        }
    }

    if (have_min) {
        sum.have_min_ratio = true;
        sum.min_ratio_lo = sqrt_enclosure(min_ratio2, pow10(-10)).lo;
    }
    return sum;
}

} // namespace pade
