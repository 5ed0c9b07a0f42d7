#include "pade/certificates.hpp"

#include "pade/pade_explicit.hpp"
#include "pade/pade_oracle.hpp"


namespace pade {

bool all_passed(const std::vector<Verdict>& verdicts) {
    for (const auto& v : verdicts)
        if (v.status != Tristate::yes) return false;
    return true;
}

bool any_failed(const std::vector<Verdict>& verdicts) {
    for (const auto& v : verdicts)
        if (v.status == Tristate::no) return true;
    return false;
}

bool any_undecided(const std::vector<Verdict>& verdicts) {
    for (const auto& v : verdicts)
        if (v.status == Tristate::undecided) return true;
    return false;
}

void FactoredInt::multiply_power(const Int& base, unsigned long e) {
    if (sgn(base) <= 0) throw std::invalid_argument("FactoredInt: base must be positive");
    if (e == 0 || base == 1) return;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e);
    value *= pw;
    for (unsigned long p : prime_divisors(base)) {
        unsigned long k = 0;
        Int t = base;
        while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
            t /= Int(static_cast<long>(p));
            ++k;
        }
        factors[p] += k * e;
    }
}

void FactoredInt::multiply(const PrimePowerProduct& pp) {
    value *= pp.value;
    for (auto [p, e] : pp.factorization) factors[p] += e;
}

namespace {

Rational int_rat(const Int& n) { return Rational(n); }

RatInterval scaled_exp(const Int& s_power_base, unsigned long s_power_exp, const Int& exponent, const Rational& eps) {
    Int spow;
    mpz_pow_ui(spow.get_mpz_t(), s_power_base.get_mpz_t(), s_power_exp);
    return int_rat(spow) * exp_enclosure(int_rat(exponent), eps);
}

} // namespace

DenominatorCertificate build_denominators(const LambdaConfig& cfg, const DegreeVector& deg, const QuadraticInt& /*a*/,
                                          const QuadraticInt& b, const Rational& eps) {
    if (b.is_zero()) throw std::invalid_argument("build_denominators: zero denominator point");
    const unsigned N = deg.N();
    const int m = cfg.m();
    const Int R = cfg.R, S = cfg.S, Rhat = cfg.Rhat, Shat = cfg.Shat;

    DenominatorCertificate cert;

    for (int j = 1; j <= m; ++j) {
        const Int s_j = cfg.lambda(j).denominator();
        cert.D1.multiply_power(s_j, 2ul * (deg.at(j) + 1));
        cert.D1.multiply(prime_power_product(int_rat(Rhat + Shat * Int(static_cast<long>(deg.at(j)))), {}));
    }

    cert.D2 = cert.D1;
    cert.D2.multiply(prime_power_product(int_rat(R + S * Int(static_cast<long>(N) + 1)), {}));

    for (int j = 1; j <= m; ++j) {
        const Int s_j = cfg.lambda(j).denominator();
        cert.D1star.multiply_power(s_j, 2ul * N);
        cert.D1star.multiply_power(s_j, 2ul * deg.at(j));
        cert.D1star.multiply(prime_power_product(int_rat(Rhat + Shat * Int(static_cast<long>(N))), {}));
    }
    cert.D1star.multiply(prime_power_product(int_rat(R + 2 * Int(static_cast<long>(N)) * S), {}));

    cert.D2star = cert.D1star;
    cert.D2star.multiply(prime_power_product(int_rat(R + S * Int(static_cast<long>(N))), {}));

    cert.DN = b.pow(N + 1) * QuadraticInt(cert.D2star.value);

    const unsigned long Nl = N, ml = static_cast<unsigned long>(m);
    cert.E1 = scaled_exp(S, 2 * (Nl + ml), 6 * (Rhat * Int(static_cast<long>(ml)) + Shat * Int(static_cast<long>(Nl))), eps);
    cert.E2 = scaled_exp(S, 2 * (Nl + ml),
                         6 * (R + S + Rhat * Int(static_cast<long>(ml)) + (Shat + S) * Int(static_cast<long>(Nl))), eps);
    cert.E1star = scaled_exp(S, 2 * (ml + 1) * Nl,
                             6 * (Int(static_cast<long>(ml)) * (Rhat + Shat * Int(static_cast<long>(Nl))) + R +
                                  2 * S * Int(static_cast<long>(Nl))),
                             eps);
    cert.E2star = scaled_exp(S, 2 * (ml + 1) * Nl,
                             6 * (Int(static_cast<long>(ml)) * (Rhat + Shat * Int(static_cast<long>(Nl))) + 2 * R +
                                  3 * S * Int(static_cast<long>(Nl))),
                             eps);

    auto divides = [](const Int& x, const Int& y) { return mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) != 0; };
    cert.d1_divides_d2 = divides(cert.D1.value, cert.D2.value);
    cert.d1_divides_d1star = divides(cert.D1.value, cert.D1star.value);
    cert.d2_divides_d2star = divides(cert.D2.value, cert.D2star.value);
    cert.d1star_divides_d2star = divides(cert.D1star.value, cert.D2star.value);
    return cert;
}

DeterminantCheck omega_determinant(const PadeSystem& sys) {
    const int m = sys.m();
    const unsigned N = sys.N();

    std::vector<std::vector<Poly>> matrix;
    matrix.reserve(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        std::vector<Poly> row;
        row.reserve(static_cast<size_t>(m) + 1);
        row.push_back(sys.Q(i));
        for (int j = 1; j <= m; ++j) row.push_back(sys.P(i, j));
        matrix.push_back(std::move(row));
    }

    DeterminantCheck out;
    out.omega = poly_determinant(matrix);
    out.expected_degree = static_cast<long>((m + 1) * N + m);

    Rational lead(-Rational(Int(1), factorial(N)));
    for (int i = 1; i <= m; ++i)
        lead *= rising_factorial(sys.config.lambda(i) + Rational(1), N + 1).reciprocal();
    out.expected_leading = lead;

    out.degree_ok = out.omega.degree() == out.expected_degree;
    out.lower_coefficients_vanish = true;
    for (long k = 0; k < out.expected_degree; ++k) {
        if (!out.omega.coeff(static_cast<size_t>(k)).is_zero()) {
            out.lower_coefficients_vanish = false;
            out.detail = "nonzero coefficient at index " + std::to_string(k) + ": " +
                         out.omega.coeff(static_cast<size_t>(k)).str();
            break;
        }
    }
    out.leading_matches = out.omega.coeff(static_cast<size_t>(out.expected_degree)) == out.expected_leading;
    out.pass = out.degree_ok && out.lower_coefficients_vanish && out.leading_matches;
    if (!out.pass && out.detail.empty())
        out.detail = "determinant = " + out.omega.str() + ", expected " + out.expected_leading.str() + " * z^" +
                     std::to_string(out.expected_degree);
    return out;
}

std::vector<Verdict> verify_orders(const PadeSystem& sys) {
    std::vector<Verdict> out;
    const unsigned N = sys.N();

    {
        Verdict v{"degrees", Tristate::yes, ""};
        for (int i = 0; i <= sys.m(); ++i) {
            if (sys.Q(i).degree() != static_cast<long>(N)) {
                v.status = Tristate::no;
                v.detail += "deg Q_" + std::to_string(i) + " = " + std::to_string(sys.Q(i).degree()) + "; ";
            }
            for (int j = 1; j <= sys.m(); ++j) {
                const long limit = static_cast<long>(sys.truncation_degree(i, j));
                const long d = sys.P(i, j).degree();
                const bool ok = (i == j && i >= 1) ? d == limit : d <= limit;
                if (!ok) {
                    v.status = Tristate::no;
                    v.detail += "deg P_" + std::to_string(i) + "," + std::to_string(j) + " = " + std::to_string(d) + "; ";
                }
            }
        }
        out.push_back(std::move(v));
    }

    {
        Verdict v{"leading-coefficients", Tristate::yes, ""};
        if (!(sys.Q(0).leading() == -Rational(Int(1), factorial(N)))) {
            v.status = Tristate::no;
            v.detail += "lead Q_0 = " + sys.Q(0).leading().str() + "; ";
        }
        for (int i = 1; i <= sys.m(); ++i) {
            const Rational expect = rising_factorial(sys.config.lambda(i) + Rational(1), N + 1).reciprocal();
            if (!(sys.P(i, i).leading() == expect)) {
                v.status = Tristate::no;
                v.detail += "lead P_" + std::to_string(i) + "," + std::to_string(i) + " = " + sys.P(i, i).leading().str() + "; ";
            }
        }
        out.push_back(std::move(v));
    }

    {
        // Every coefficient of Q_i phi_j - P_ij below the order claim must
        // vanish; this covers both the construction's window and any
        // corruption of the stored numerators.
        Verdict v{"vanishing-window", Tristate::yes, ""};
        for (int i = 0; i <= sys.m(); ++i) {
            for (int j = 1; j <= sys.m(); ++j) {
                const unsigned long claim = sys.order_claim(i, j); // first index allowed nonzero
                std::vector<Rational> c = series_product_coefficients(sys.Q(i), sys.config.lambda(j), claim - 1);
                for (unsigned long mu = 0; mu < claim; ++mu) {
                    Rational r = c[mu] - sys.P(i, j).coeff(mu);
                    if (!r.is_zero()) {
                        v.status = Tristate::no;
                        v.detail += "remainder coefficient " + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(mu) + " = " + r.str() + "; ";
                    }
                }
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Verdict> verify_source_equality(const LambdaConfig& cfg, const DegreeVector& deg) {
    std::vector<Verdict> out;
    PadeSystem ex = build_system(cfg, deg, Source::explicit_formula);
    PadeSystem or_ = build_system(cfg, deg, Source::oracle);
    Verdict v{"explicit-equals-oracle", Tristate::yes, ""};
    for (int i = 0; i <= cfg.m(); ++i) {
        if (!(ex.Q(i) == or_.Q(i))) {
            v.status = Tristate::no;
            v.detail += "Q_" + std::to_string(i) + " differs; ";
        }
        for (int j = 1; j <= cfg.m(); ++j) {
            if (!(ex.P(i, j) == or_.P(i, j))) {
                v.status = Tristate::no;
                v.detail += "P_" + std::to_string(i) + "," + std::to_string(j) + " differs; ";
            }
        }
    }
    out.push_back(std::move(v));
    return out;
}

namespace {

bool scaled_is_integer(const Rational& value, const Int& factor, const Int& denom_clear) {
    Rational scaled = value * Rational(factor) * Rational(denom_clear);
    return scaled.is_integer();
}

} // namespace

std::vector<Verdict> verify_integrality(const PadeSystem& sys, const DenominatorCertificate& cert) {
    std::vector<Verdict> out;
    const unsigned N = sys.N();

    {
        Verdict v{"coefficient-integrality", Tristate::yes, ""};
        for (int i = 0; i <= sys.m(); ++i) {
            const Int& clear = i == 0 ? cert.D1star.value : cert.D1.value;
            for (unsigned k = 0; k <= N; ++k) {
                if (!scaled_is_integer(sys.Q(i).coeff(k), factorial(k), clear)) {
                    v.status = Tristate::no;
                    v.detail += "k! D a_{" + std::to_string(i) + "," + std::to_string(k) + "} not integral; ";
                }
            }
        }
        out.push_back(std::move(v));
    }

    {
        Verdict v{"series-coefficient-integrality", Tristate::yes, ""};
        const Int fac = factorial(N + 1);
        for (int i = 0; i <= sys.m(); ++i) {
            const Int& clear = i == 0 ? cert.D2star.value : cert.D2.value;
            for (int j = 1; j <= sys.m(); ++j) {
                const unsigned long top = sys.truncation_degree(i, j);
                for (unsigned long mu = 0; mu <= top; ++mu) {
                    if (!scaled_is_integer(sys.P(i, j).coeff(mu), fac, clear)) {
                        v.status = Tristate::no;
                        v.detail += "(N+1)! D c_{" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(mu) + "} not integral; ";
                    }
                }
            }
        }
        out.push_back(std::move(v));
    }

    {
        Verdict v{"denominator-divisibility", Tristate::yes, ""};
        if (!cert.d1_divides_d1star) v.detail += "D1 does not divide D1*; ";
        if (!cert.d2_divides_d2star) v.detail += "D2 does not divide D2*; ";
        if (!cert.d1_divides_d2) v.detail += "D1 does not divide D2; ";
        if (!cert.d1star_divides_d2star) v.detail += "D1* does not divide D2*; ";
        if (!v.detail.empty()) v.status = Tristate::no;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// F1 = S^(3N) e^(6(Rm+S+S(m+1)N)); F1* = (8 S^3)^N e^(6(R(m+1)+S(m+3)N)).
RatInterval row_coefficient_bound(const LambdaConfig& cfg, unsigned N, bool row0, const Rational& eps) {
    const Int R = cfg.R, S = cfg.S;
    const long m = cfg.m();
    Int spow, eight_pow(1);
    if (row0) {
        mpz_pow_ui(spow.get_mpz_t(), S.get_mpz_t(), 3 * N);
        mpz_ui_pow_ui(eight_pow.get_mpz_t(), 8, N);
        Int expo = 6 * (R * Int(m + 1) + S * Int(m + 3) * Int(static_cast<long>(N)));
        return Rational(spow * eight_pow) * exp_enclosure(Rational(expo), eps);
    }
    mpz_pow_ui(spow.get_mpz_t(), S.get_mpz_t(), 3 * N);
    Int expo = 6 * (R * Int(m) + S + S * Int(m + 1) * Int(static_cast<long>(N)));
    return Rational(spow) * exp_enclosure(Rational(expo), eps);
}

std::string tri_name(Tristate t) {
    switch (t) {
        case Tristate::yes: return "pass";
        case Tristate::no: return "fail";
        default: return "undecided";
    }
}

} // namespace

namespace {

void fold_status(Verdict& v, Tristate t, const std::string& what) {
    if (t == Tristate::yes) return;
    if (t == Tristate::no) v.status = Tristate::no;
    else if (v.status != Tristate::no) v.status = Tristate::undecided;
    v.detail += what + ": " + tri_name(t) + "; ";
}

} // namespace

std::vector<Verdict> verify_size_bounds(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                        const DenominatorCertificate& cert, const BoundConstants& constants) {
    std::vector<Verdict> out;
    const unsigned N = sys.N();
    const LambdaConfig& cfg = sys.config;
    const QuadRational alpha = QuadRational::ratio(a, b);
    const long Nl = static_cast<long>(N);
    const Rational eps0 = constants.eps.sign() > 0 ? constants.eps : pow10(-10);

    // Shared bound enclosures; the per-item slow path below refines on its
    // own only when the first-pass comparison is inconclusive.
    const RatInterval F1 = row_coefficient_bound(cfg, N, false, eps0);
    const RatInterval F1star = row_coefficient_bound(cfg, N, true, eps0);

    {
        Verdict v{"coefficient-size", Tristate::yes, ""};
        for (int i = 0; i <= sys.m(); ++i) {
            const bool row0 = i == 0;
            const RatInterval& F = row0 ? F1star : F1;
            Rational two_k(1);
            for (unsigned k = 0; k <= N; ++k, two_k *= Rational(2)) {
                const Rational lhs = (Rational(factorial(k)) * sys.Q(i).coeff(k)).abs();
                if (lhs <= two_k * F.lo) continue;
                Tristate t = decide_leq([&](const Rational& eps) {
                    RatInterval bound = two_k * row_coefficient_bound(cfg, N, row0, eps);
                    return std::pair{RatInterval::point(lhs), bound};
                });
                fold_status(v, t, "|k! a_{" + std::to_string(i) + "," + std::to_string(k) + "}| vs 2^k F");
            }
        }
        out.push_back(std::move(v));
    }

    {
        // Pointwise value bound e^(c1+c2 N) and the coefficient-sum form F e^(2|z|).
        Verdict v{"row-value-size", Tristate::yes, ""};
        const RatInterval value_bound2 =
            exp_of(Rational(2) * (constants.c1 + Rational(Nl) * constants.c2), eps0);
        const RatInterval sum_factor2 = exp_of(Rational(4) * constants.abs_alpha, eps0);
        for (int i = 0; i <= sys.m(); ++i) {
            const Rational q2 = sys.Q(i).eval(alpha).abs_squared();
            if (!(q2 <= value_bound2.lo)) {
                Tristate t = decide_leq([&](const Rational& eps) {
                    BoundConstants c = compute_constants(cfg, a, b, cfg.m(), eps);
                    RatInterval expo = Rational(2) * (c.c1 + Rational(Nl) * c.c2);
                    return std::pair{RatInterval::point(q2), exp_of(expo, eps)};
                });
                fold_status(v, t, "|Q_" + std::to_string(i) + "(alpha)| vs e^{c1+c2 N}");
            }
            const RatInterval sum_bound2 = pow_int(i == 0 ? F1star : F1, 2) * sum_factor2;
            if (!(q2 <= sum_bound2.lo)) {
                Tristate t = decide_leq([&](const Rational& eps) {
                    RatInterval f = row_coefficient_bound(cfg, N, i == 0, eps);
                    BoundConstants c = compute_constants(cfg, a, b, cfg.m(), eps);
                    return std::pair{RatInterval::point(q2),
                                     pow_int(f, 2) * exp_of(Rational(4) * c.abs_alpha, eps)};
                });
                fold_status(v, t, "|Q_" + std::to_string(i) + "(alpha)| vs F e^{2|alpha|}");
            }
        }
        out.push_back(std::move(v));
    }

    {
        Verdict v{"denominator-size", Tristate::yes, ""};
        struct Item {
            const char* name;
            const Int* d;
            const RatInterval* bound;
            int which;
        } items[] = {{"D1", &cert.D1.value, &cert.E1, 1},
                     {"D2", &cert.D2.value, &cert.E2, 2},
                     {"D1*", &cert.D1star.value, &cert.E1star, 3},
                     {"D2*", &cert.D2star.value, &cert.E2star, 4}};
        for (const auto& item : items) {
            if (Rational(*item.d) <= item.bound->lo) continue;
            Tristate t = decide_leq([&](const Rational& eps) {
                DenominatorCertificate c = build_denominators(cfg, sys.degrees, a, b, eps);
                const RatInterval& bound =
                    item.which == 1 ? c.E1 : item.which == 2 ? c.E2 : item.which == 3 ? c.E1star : c.E2star;
                return std::pair{RatInterval::point(Rational(*item.d)), bound};
            });
            fold_status(v, t, std::string(item.name) + " vs bound");
        }
        out.push_back(std::move(v));
    }

    {
        Verdict v{"global-denominator-size", Tristate::yes, ""};
        const Rational dn2 = cert.DN.abs_squared();
        const RatInterval dn_bound2 = exp_of(Rational(2) * (constants.c3 + Rational(Nl) * constants.c4), eps0);
        if (!(dn2 <= dn_bound2.lo)) {
            Tristate t = decide_leq([&](const Rational& eps) {
                BoundConstants c = compute_constants(cfg, a, b, cfg.m(), eps);
                RatInterval expo = Rational(2) * (c.c3 + Rational(Nl) * c.c4);
                return std::pair{RatInterval::point(dn2), exp_of(expo, eps)};
            });
            fold_status(v, t, "|D(N)| vs e^{c3+c4 N}");
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// |(N+1)! D(N) R_ij(alpha)|^2 enclosed by an exact partial sum over `terms`
// coefficients plus the series tail majorant
// 2^(N+1) F (2 S^2 |alpha|)^mu / mu! summed past the cutoff.
RatInterval remainder_lhs_squared(const PadeSystem& sys, int i, int j, const QuadRational& alpha, const Rational& x,
                                  const Rational& exp_x_hi, const Rational& fac2, const Rational& dn2,
                                  const RatInterval& F, unsigned long terms, const Rational& eps) {
    const long degP = sys.P(i, j).degree();
    const unsigned long start = degP < 0 ? 0 : static_cast<unsigned long>(degP) + 1;

    std::vector<Rational> coeffs = remainder_coefficients(sys, i, j, terms);
    QuadRational sum(Rational(0));
    QuadRational power = alpha.d == 0 ? QuadRational(Rational(1)) : QuadRational(alpha.d, Rational(1), Rational(0));
    for (unsigned long t = 0; t < start; ++t) power = power * alpha;
    for (unsigned long t = 0; t < terms; ++t) {
        sum = sum + coeffs[t] * power;
        power = power * alpha;
    }

    const unsigned long M = start + terms - 1;
    Rational xpow(1);
    Int mfac(1);
    for (unsigned long t = 1; t <= M + 1; ++t) {
        xpow *= x;
        mfac *= Int(static_cast<long>(t));
    }
    Rational tail_hi = Rational(Int(Int(1) << (sys.N() + 1))) * F.hi * (xpow / Rational(mfac)) * exp_x_hi;
    return fac2 * RatInterval::point(dn2) * ComplexEnclosure::of(sum, eps).widened(tail_hi).abs_squared();
}

} // namespace

std::vector<Verdict> verify_remainder_bound(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                            const DenominatorCertificate& cert, const BoundConstants& constants) {
    std::vector<Verdict> out;
    const unsigned N = sys.N();
    const long Nl = static_cast<long>(N);
    const LambdaConfig& cfg = sys.config;
    const QuadRational alpha = QuadRational::ratio(a, b);
    const Rational A = sqrt_enclosure(alpha.abs_squared(), Rational(Int(1), Int(1000))).hi;
    const Rational x = Rational(2) * Rational(cfg.S) * Rational(cfg.S) * A; // 2 S^2 |alpha| upper bound
    const Rational fac2 = Rational(factorial(N + 1)).squared();
    const Rational dn2 = cert.DN.abs_squared();
    const Rational eps0 = constants.eps.sign() > 0 ? constants.eps : pow10(-10);

    const Rational exp_x_hi = exp_enclosure(x, Rational(1)).hi;
    const RatInterval F1 = row_coefficient_bound(cfg, N, false, eps0);
    const RatInterval F1star = row_coefficient_bound(cfg, N, true, eps0);
    const RatInterval rhs_exp = exp_of(Rational(2) * (constants.c5 + Rational(Nl) * constants.c6), eps0);

    Verdict v{"remainder-size", Tristate::yes, ""};
    for (int i = 0; i <= sys.m(); ++i) {
        for (int j = 1; j <= sys.m(); ++j) {
            const unsigned long n_j = sys.degrees.at(j);
            Int npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), N, 2 * n_j);
            const RatInterval rhs2 = Rational(Int(1), npow) * rhs_exp;
            const RatInterval& F = i == 0 ? F1star : F1;

            RatInterval lhs2 = remainder_lhs_squared(sys, i, j, alpha, x, exp_x_hi, fac2, dn2, F, 12, eps0);
            if (lhs2.hi <= rhs2.lo) continue;

            Tristate t = decide_leq([&](const Rational& eps) {
                unsigned long terms = 16;
                for (Rational e = eps; e < Rational(1) && terms < 4096; e *= Rational(1000)) terms += 16;
                RatInterval f = row_coefficient_bound(cfg, N, i == 0, eps);
                RatInterval l2 = remainder_lhs_squared(sys, i, j, alpha, x, exp_x_hi, fac2, dn2, f, terms, eps);
                BoundConstants c = compute_constants(cfg, a, b, cfg.m(), eps);
                RatInterval r2 = Rational(Int(1), npow) * exp_of(Rational(2) * (c.c5 + Rational(Nl) * c.c6), eps);
                return std::pair{l2, r2};
            });
            fold_status(v, t, "row " + std::to_string(i) + " col " + std::to_string(j));
        }
    }
    out.push_back(std::move(v));
    return out;
}

std::vector<Verdict> verify_membership(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                       const DenominatorCertificate& cert) {
    std::vector<Verdict> out;
    const unsigned N = sys.N();
    const QuadRational alpha = QuadRational::ratio(a, b);
    const QuadRational dn = QuadRational::from(cert.DN);
    const Rational fac = Rational(factorial(N + 1));

    Verdict v{"scaled-values-integral", Tristate::yes, ""};
    for (int i = 0; i <= sys.m(); ++i) {
        QuadRational q = fac * (dn * sys.Q(i).eval(alpha));
        if (!q.is_algebraic_integer()) {
            v.status = Tristate::no;
            v.detail += "(N+1)! D(N) Q_" + std::to_string(i) + "(alpha) = " + q.str() + "; ";
        }
        for (int j = 1; j <= sys.m(); ++j) {
            QuadRational p = fac * (dn * sys.P(i, j).eval(alpha));
            if (!p.is_algebraic_integer()) {
                v.status = Tristate::no;
                v.detail += "(N+1)! D(N) P_" + std::to_string(i) + "," + std::to_string(j) + "(alpha) = " + p.str() + "; ";
            }
        }
    }
    out.push_back(std::move(v));
    return out;
}

Certificate certify_system(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b, const Rational& eps) {
    Certificate cert;
    cert.denominators = build_denominators(sys.config, sys.degrees, a, b, eps);
    cert.determinant = omega_determinant(sys);
    cert.orders = verify_orders(sys);
    BoundConstants constants = compute_constants(sys.config, a, b, sys.config.m(), eps);
    cert.integrality = verify_integrality(sys, cert.denominators);
    cert.size_bounds = verify_size_bounds(sys, a, b, cert.denominators, constants);
    cert.remainder_bounds = verify_remainder_bound(sys, a, b, cert.denominators, constants);
    cert.membership = verify_membership(sys, a, b, cert.denominators);

    bool failed = !cert.determinant.pass || any_failed(cert.orders) || any_failed(cert.integrality) ||
                  any_failed(cert.size_bounds) || any_failed(cert.remainder_bounds) || any_failed(cert.membership);
    bool undecided = any_undecided(cert.orders) || any_undecided(cert.integrality) || any_undecided(cert.size_bounds) ||
                     any_undecided(cert.remainder_bounds) || any_undecided(cert.membership);
    cert.overall = failed ? Tristate::no : undecided ? Tristate::undecided : Tristate::yes;
    return cert;
}

} // namespace pade
