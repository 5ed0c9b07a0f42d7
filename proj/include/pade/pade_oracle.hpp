#ifndef PADE_PADE_ORACLE_HPP
#define PADE_PADE_ORACLE_HPP

#include "pade/pade_system.hpp"

namespace pade {

class SingularSystemError : public std::runtime_error {
public:
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Square system over the rationals in the falling-factorial value basis.
struct LinearSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
};

/// Row of falling-factorial basis values 1, g, g(g-1), ..., width terms.
std::vector<Rational> falling_factorial_row(const Rational& g, size_t width);

/// Matrix with rows falling_factorial_row(g, width) for each node g, built
/// columnwise by col_{k+1} = col_k * (g - k).
std::vector<std::vector<Rational>> falling_factorial_matrix(const std::vector<Rational>& gammas, size_t width);

/// Exact solve by fraction-free (Bareiss) elimination after clearing row
/// denominators. Throws SingularSystemError when no unique solution exists.
std::vector<Rational> solve_fraction_free(const LinearSystem& sys);

/// Classical rational Gaussian elimination; second route for cross-checks.
std::vector<Rational> solve_classical(const LinearSystem& sys);

/// Exact determinant of a square rational matrix (fraction-free elimination).
Rational rational_determinant(std::vector<std::vector<Rational>> matrix);

/// Independent derivation of the row-0 coefficients a_0..a_N by solving the
/// defining homogeneous system with a_N = -1/N! moved to the right-hand side.
std::vector<Rational> solve_first_system(const LambdaConfig& cfg, const DegreeVector& deg);

/// Independent derivation of the row-i coefficients: value 1 at the unit
/// node, 0 at the zero nodes.
std::vector<Rational> solve_second_system(const LambdaConfig& cfg, const DegreeVector& deg, int i);

/// prod_{i<j} (g_j - g_i); its nonvanishing is exactly the pairwise
/// distinctness of the nodes.
Rational vandermonde_delta(const std::vector<Rational>& gammas);

/// The same determinant computed directly from the falling-factorial matrix.
Rational falling_factorial_determinant(const std::vector<Rational>& gammas);

/// Checks the alternating-binomial cofactor identity
///   k! delta_{sigma,k} / delta = sum_tau (-1)^(k-tau) C(k,tau)
///       prod_{s != sigma} (tau - g_s)/(g_sigma - g_s)
/// with delta_{sigma,k} computed as a true signed minor, plus the Lagrange
/// form of the row polynomial sampled at z = 0..N-1.
struct CofactorCheck {
    int sigma = 0;
    int k = 0;
    Rational lhs, rhs;
    bool identity_holds = false;
    bool lagrange_holds = false;
    bool pass = false;
};
CofactorCheck verify_cofactor_identity(const std::vector<Rational>& gammas, int sigma, int k);

} // namespace pade

#endif
