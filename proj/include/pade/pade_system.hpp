#ifndef PADE_PADE_SYSTEM_HPP
#define PADE_PADE_SYSTEM_HPP

#include "pade/efunction.hpp"
#include "pade/poly.hpp"

#include <string>
#include <vector>

namespace pade {

struct DegreeVector {
    std::vector<unsigned> n; // n_1..n_m, all >= 1

    static DegreeVector of(std::vector<unsigned> parts);
    unsigned N() const;
    unsigned at(int j) const { return n.at(static_cast<size_t>(j - 1)); } // 1-based
    int m() const { return static_cast<int>(n.size()); }
};

enum class Source { explicit_formula, oracle };

std::string source_name(Source s);

class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(int row, std::string what_failed)
        : std::runtime_error("row " + std::to_string(row) + ": " + what_failed), row(row) {}
    int row;
};

/// One simultaneous approximation row: the common denominator Q_i and the
/// numerators P_{i1}..P_{im}.
struct PadeRow {
    Poly Q;
    std::vector<Poly> P;
};

/// The m+1 rows of the second-kind approximation system for a given
/// configuration and degree vector. Structural invariants (degrees and
/// leading coefficients) are enforced at build time:
///   deg Q_i = N, deg P_{ii} = N+1, deg P_{ij} <= N otherwise,
///   lead Q_0 = -1/N!, lead P_{ii} = 1/(lambda_i+1)_{N+1}.
struct PadeSystem {
    LambdaConfig config;
    DegreeVector degrees;
    std::vector<PadeRow> rows; // index 0..m
    Source source = Source::explicit_formula;

    int m() const { return config.m(); }
    unsigned N() const { return degrees.N(); }
    const Poly& Q(int i) const { return rows.at(static_cast<size_t>(i)).Q; }
    const Poly& P(int i, int j) const { return rows.at(static_cast<size_t>(i)).P.at(static_cast<size_t>(j - 1)); }

    /// Degree at which P_{ij} truncates the product series: N + (i==j).
    unsigned truncation_degree(int i, int j) const {
        return N() + (i >= 1 && i == j ? 1u : 0u);
    }
    /// First series index the construction does not force to vanish:
    /// N + n_j + 1 + (i==j).
    unsigned long order_claim(int i, int j) const {
        return N() + degrees.at(j) + 1 + (i >= 1 && i == j ? 1u : 0u);
    }
};

/// The N prescribed zeros of the row-0 auxiliary polynomial in the
/// falling-factorial basis: block j holds N+1+lambda_j .. N+n_j+lambda_j.
std::vector<Rational> vanishing_nodes(const LambdaConfig& cfg, const DegreeVector& deg);

/// Row i >= 1 additionally carries the node where the system is pinned to 1;
/// block i of the zero nodes is shifted up by one.
struct RowNodes {
    Rational unit_node;
    std::vector<Rational> zero_nodes;
};
RowNodes row_nodes(const LambdaConfig& cfg, const DegreeVector& deg, int i);

/// Cauchy product coefficients c_mu = sum_{k <= min(mu, deg q)} a_k / [mu-k]
/// of q against the series with shift lambda, for mu = 0..up_to.
std::vector<Rational> series_product_coefficients(const Poly& q, const Rational& lambda, unsigned long up_to);

/// Coefficients of Q_i phi_j - P_{ij} for mu = deg P_{ij} + 1, ..., counting
/// `count` values upward.
std::vector<Rational> remainder_coefficients(const PadeSystem& sys, int i, int j, unsigned long count);

} // namespace pade

#endif
