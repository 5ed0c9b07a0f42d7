#ifndef PADE_CERTIFICATES_HPP
#define PADE_CERTIFICATES_HPP

#include "pade/constants.hpp"
#include "pade/pade_system.hpp"
#include "pade/primes.hpp"

#include <map>

namespace pade {

/// Outcome of one machine check, with indices and witness values spelled out
/// in `detail` when something is off.
struct Verdict {
    std::string check;
    Tristate status = Tristate::yes;
    std::string detail;
};

bool all_passed(const std::vector<Verdict>& verdicts);
bool any_failed(const std::vector<Verdict>& verdicts);
bool any_undecided(const std::vector<Verdict>& verdicts);

/// Positive integer carried together with its prime factorization.
struct FactoredInt {
    Int value = 1;
    std::map<unsigned long, unsigned long> factors;

    void multiply_power(const Int& base, unsigned long e); // base > 0, trial-factored
    void multiply(const PrimePowerProduct& pp);
};

/// The explicit clearing denominators for one (config, degrees) pair, the
/// global denominator witness for a point alpha = a/b, and enclosures of
/// their analytic upper bounds.
struct DenominatorCertificate {
    FactoredInt D1, D2, D1star, D2star;
    QuadraticInt DN; // b^(N+1) * D2star

    RatInterval E1, E2, E1star, E2star;

    bool d1_divides_d2 = false;
    bool d1_divides_d1star = false;
    bool d2_divides_d2star = false;
    bool d1star_divides_d2star = false;
};

DenominatorCertificate build_denominators(const LambdaConfig& cfg, const DegreeVector& deg, const QuadraticInt& a,
                                          const QuadraticInt& b, const Rational& eps);

/// The (m+1)x(m+1) determinant of the system rows must collapse to a single
/// monomial c z^((m+1)N+m) with c = (-1/N!) prod_i prod_{nu=1}^{N+1}
/// (lambda_i + nu)^(-1).
struct DeterminantCheck {
    Poly omega;
    long expected_degree = 0;
    Rational expected_leading;
    bool degree_ok = false;
    bool lower_coefficients_vanish = false;
    bool leading_matches = false;
    bool pass = false;
    std::string detail;
};

DeterminantCheck omega_determinant(const PadeSystem& sys);

/// Vanishing-window, degree, and leading-coefficient checks for every row.
std::vector<Verdict> verify_orders(const PadeSystem& sys);

/// Closed-form coefficients against the exact linear-system solutions.
std::vector<Verdict> verify_source_equality(const LambdaConfig& cfg, const DegreeVector& deg);

/// Exact divisibility facts: k! D1 a_ik, k! D1* a_0k, (N+1)! D2 c_ij,
/// (N+1)! D2* c_0j all integral, plus D1 | D1* and D2 | D2*.
std::vector<Verdict> verify_integrality(const PadeSystem& sys, const DenominatorCertificate& cert);

/// Analytic size bounds: |k! a_ik| <= 2^k F1 (rows >= 1) and 2^k F1* (row 0),
/// |Q_i(alpha)| <= e^(c1+c2 N), the four D <= E comparisons, and
/// |D(N)| <= e^(c3+c4 N). All comparisons are of exact quantities against
/// directed interval ends, refined until decided or the width cap is hit.
std::vector<Verdict> verify_size_bounds(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                        const DenominatorCertificate& cert, const BoundConstants& constants);

/// |(N+1)! D(N) R_ij(alpha)| <= e^(c5+c6 N) N^(-n_j) for every row and
/// column, with R_ij(alpha) enclosed by exact partial sums plus the series
/// tail majorant.
std::vector<Verdict> verify_remainder_bound(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                            const DenominatorCertificate& cert, const BoundConstants& constants);

/// (N+1)! D(N) Q_i(alpha) and (N+1)! D(N) P_ij(alpha) are algebraic integers.
std::vector<Verdict> verify_membership(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b,
                                       const DenominatorCertificate& cert);

/// One auditable record per (system, alpha): all checks above.
struct Certificate {
    DenominatorCertificate denominators;
    DeterminantCheck determinant;
    std::vector<Verdict> orders, integrality, size_bounds, remainder_bounds, membership;
    Tristate overall = Tristate::undecided;
};

Certificate certify_system(const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b, const Rational& eps);

} // namespace pade

#endif
