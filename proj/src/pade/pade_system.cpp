#include "pade/pade_system.hpp"

namespace pade {

DegreeVector DegreeVector::of(std::vector<unsigned> parts) {
    if (parts.empty()) throw std::invalid_argument("DegreeVector: empty");
    for (unsigned v : parts)
        if (v == 0) throw std::invalid_argument("DegreeVector: degrees must be positive");
    DegreeVector d;
    d.n = std::move(parts);
    return d;
}

unsigned DegreeVector::N() const {
    unsigned total = 0;
    for (unsigned v : n) total += v;
    return total;
}

std::string source_name(Source s) {
    return s == Source::explicit_formula ? "explicit" : "oracle";
}

std::vector<Rational> vanishing_nodes(const LambdaConfig& cfg, const DegreeVector& deg) {
    if (cfg.m() != deg.m()) throw std::invalid_argument("vanishing_nodes: size mismatch");
    const long N = static_cast<long>(deg.N());
    std::vector<Rational> nodes;
    nodes.reserve(deg.N());
    for (int j = 1; j <= cfg.m(); ++j)
        for (unsigned nu = 1; nu <= deg.at(j); ++nu)
            nodes.push_back(Rational(N + static_cast<long>(nu)) + cfg.lambda(j));
    return nodes;
}

RowNodes row_nodes(const LambdaConfig& cfg, const DegreeVector& deg, int i) {
    if (i < 1 || i > cfg.m()) throw std::invalid_argument("row_nodes: row index out of range");
    if (cfg.m() != deg.m()) throw std::invalid_argument("row_nodes: size mismatch");
    const long N = static_cast<long>(deg.N());
    RowNodes out;
    out.unit_node = Rational(N + 1) + cfg.lambda(i);
    out.zero_nodes.reserve(deg.N());
    for (int j = 1; j <= cfg.m(); ++j) {
        const long shift = j == i ? 1 : 0;
        for (unsigned nu = 1; nu <= deg.at(j); ++nu)
            out.zero_nodes.push_back(Rational(N + static_cast<long>(nu) + shift) + cfg.lambda(j));
    }
    return out;
}

std::vector<Rational> series_product_coefficients(const Poly& q, const Rational& lambda, unsigned long up_to) {
    // 1/[t] computed incrementally for t = 0..up_to.
    std::vector<Rational> inv_bracket(up_to + 1);
    Rational bracket(1);
    inv_bracket[0] = Rational(1);
    for (unsigned long t = 1; t <= up_to; ++t) {
        bracket *= lambda + Rational(Int(static_cast<long>(t)));
        if (bracket.is_zero()) throw std::domain_error("series_product_coefficients: zero bracket factor");
        inv_bracket[t] = bracket.reciprocal();
    }
    const long degq = q.degree();
    std::vector<Rational> c(up_to + 1, Rational(0));
    for (unsigned long mu = 0; mu <= up_to; ++mu) {
        const unsigned long kmax = degq < 0 ? 0 : std::min<unsigned long>(mu, static_cast<unsigned long>(degq));
        Rational acc(0);
        for (unsigned long k = 0; k <= kmax; ++k) acc += q.coeff(k) * inv_bracket[mu - k];
        c[mu] = acc;
    }
    if (degq < 0) c.assign(up_to + 1, Rational(0));
    return c;
}

std::vector<Rational> remainder_coefficients(const PadeSystem& sys, int i, int j, unsigned long count) {
    if (count == 0) throw std::invalid_argument("remainder_coefficients: count must be positive");
    if (i < 0 || i > sys.m() || j < 1 || j > sys.m())
        throw std::invalid_argument("remainder_coefficients: index out of range");
    const long degP = sys.P(i, j).degree();
    const unsigned long start = degP < 0 ? 0 : static_cast<unsigned long>(degP) + 1;
    const unsigned long up_to = start + count - 1;
    std::vector<Rational> c = series_product_coefficients(sys.Q(i), sys.config.lambda(j), up_to);
    std::vector<Rational> out;
    out.reserve(count);
    for (unsigned long mu = start; mu <= up_to; ++mu) out.push_back(c[mu]);
    return out;
}

} // namespace pade
