#include "pade/pade_explicit.hpp"

#include "pade/pade_oracle.hpp"

namespace pade {

namespace {

// prod_{s != sigma} (tau - g_s) / (g_sigma - g_s), recomputed in full.
Rational excluded_node_product(const std::vector<Rational>& g, size_t sigma, const Rational& tau) {
    Rational num(1), den(1);
    for (size_t s = 0; s < g.size(); ++s) {
        if (s == sigma) continue;
        num *= tau - g[s];
        den *= g[sigma] - g[s];
    }
    return num / den;
}

} // namespace

std::vector<Rational> q0_coefficients(const LambdaConfig& cfg, const DegreeVector& deg) {
    const unsigned N = deg.N();
    const std::vector<Rational> g = vanishing_nodes(cfg, deg);
    std::vector<Rational> a(N + 1);
    a[N] = -Rational(Int(1), factorial(N));
    if (N == 0) return a;

    // weight_sigma = prod_{mu=0}^{N-1} (g_sigma - mu) / (1 + mu)
    std::vector<Rational> weight(N);
    for (size_t sigma = 0; sigma < N; ++sigma) {
        Rational w(1);
        for (unsigned mu = 0; mu < N; ++mu)
            w *= (g[sigma] - Rational(static_cast<long>(mu))) / Rational(static_cast<long>(mu) + 1);
        weight[sigma] = w;
    }

    // pi[sigma][tau] = prod_{s != sigma} (tau - g_s)/(g_sigma - g_s)
    std::vector<std::vector<Rational>> pi(N, std::vector<Rational>(N));
    for (size_t sigma = 0; sigma < N; ++sigma)
        for (unsigned tau = 0; tau < N; ++tau)
            pi[sigma][tau] = excluded_node_product(g, sigma, Rational(static_cast<long>(tau)));

    for (unsigned k = 0; k < N; ++k) {
        Rational acc(0);
        for (size_t sigma = 0; sigma < N; ++sigma) {
            Rational inner(0);
            for (unsigned tau = 0; tau <= k; ++tau) {
                Rational term = Rational(binomial(k, tau)) * pi[sigma][tau];
                inner += (k - tau) % 2 == 0 ? term : -term;
            }
            acc += weight[sigma] * inner;
        }
        a[k] = acc / Rational(factorial(k));
    }
    return a;
}

std::vector<Rational> qi_coefficients(const LambdaConfig& cfg, const DegreeVector& deg, int i) {
    const unsigned N = deg.N();
    const RowNodes nodes = row_nodes(cfg, deg, i);

    // pi[tau] = prod_s (tau - z_s) / (u - z_s)
    std::vector<Rational> pi(N + 1);
    for (unsigned tau = 0; tau <= N; ++tau) {
        Rational num(1), den(1);
        for (const Rational& z : nodes.zero_nodes) {
            num *= Rational(static_cast<long>(tau)) - z;
            den *= nodes.unit_node - z;
        }
        pi[tau] = num / den;
    }

    std::vector<Rational> a(N + 1);
    for (unsigned k = 0; k <= N; ++k) {
        Rational acc(0);
        for (unsigned tau = 0; tau <= k; ++tau) {
            Rational term = Rational(binomial(k, tau)) * pi[tau];
            acc += (k - tau) % 2 == 0 ? term : -term;
        }
        a[k] = acc / Rational(factorial(k));
    }
    return a;
}

PadeSystem build_system(const LambdaConfig& cfg, const DegreeVector& deg, Source source) {
    if (cfg.m() != deg.m()) throw std::invalid_argument("build_system: size mismatch");
    const unsigned N = deg.N();
    const int m = cfg.m();

    PadeSystem sys;
    sys.config = cfg;
    sys.degrees = deg;
    sys.source = source;
    sys.rows.resize(static_cast<size_t>(m) + 1);

    for (int i = 0; i <= m; ++i) {
        std::vector<Rational> a;
        if (source == Source::explicit_formula)
            a = i == 0 ? q0_coefficients(cfg, deg) : qi_coefficients(cfg, deg, i);
        else
            a = i == 0 ? solve_first_system(cfg, deg) : solve_second_system(cfg, deg, i);
        Poly q = Poly::from_coefficients(a);
        if (q.degree() != static_cast<long>(N))
            throw InvariantViolation(i, "deg Q = " + std::to_string(q.degree()) + ", expected " + std::to_string(N));
        if (i == 0 && !(q.leading() == -Rational(Int(1), factorial(N))))
            throw InvariantViolation(0, "leading coefficient of Q is " + q.leading().str());

        PadeRow row;
        row.Q = q;
        for (int j = 1; j <= m; ++j) {
            const unsigned trunc = N + (i >= 1 && i == j ? 1u : 0u);
            std::vector<Rational> c = series_product_coefficients(q, cfg.lambda(j), trunc);
            Poly p = Poly::from_coefficients(std::move(c));
            if (i >= 1 && i == j) {
                const Rational expected_lead = rising_factorial(cfg.lambda(i) + Rational(1), N + 1).reciprocal();
                if (p.degree() != static_cast<long>(N) + 1)
                    throw InvariantViolation(i, "deg P_" + std::to_string(i) + std::to_string(j) + " = " +
                                                    std::to_string(p.degree()) + ", expected " + std::to_string(N + 1));
                if (!(p.leading() == expected_lead))
                    throw InvariantViolation(i, "leading coefficient of P_" + std::to_string(i) + std::to_string(j) +
                                                    " is " + p.leading().str() + ", expected " + expected_lead.str());
            } else if (p.degree() > static_cast<long>(N)) {
                throw InvariantViolation(i, "deg P_" + std::to_string(i) + std::to_string(j) + " exceeds " +
                                                std::to_string(N));
            }
            row.P.push_back(std::move(p));
        }
        sys.rows[static_cast<size_t>(i)] = std::move(row);
    }
    return sys;
}

} // namespace pade
