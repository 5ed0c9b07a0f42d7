#ifndef PADE_EFUNCTION_HPP
#define PADE_EFUNCTION_HPP

#include "pade/factorials.hpp"
#include "pade/quadratic.hpp"

#include <stdexcept>
#include <vector>

namespace pade {

class ValidationError : public std::runtime_error {
public:
    enum class Kind { negative_integer_lambda, integer_difference };

    ValidationError(Kind k, int i_, int j_, std::string msg)
        : std::runtime_error(std::move(msg)), kind(k), i(i_), j(j_) {}

    Kind kind;
    int i; // 1-based parameter index
    int j; // second index for integer_difference, else 0
};

/// Validated shift parameters of the series family, with the size statistics
/// used throughout the denominator and growth bounds:
///   R = max |r_j|, S = max s_j over lambda_j = r_j/s_j (reduced), and
///   Rhat, Shat the same statistics over the pairwise differences
///   lambda_k - lambda_j (k != j). For m = 1 the difference set is empty and
///   Rhat = Shat = 0.
struct LambdaConfig {
    std::vector<Rational> lambdas;
    Int R, S, Rhat, Shat;

    int m() const { return static_cast<int>(lambdas.size()); }
    const Rational& lambda(int j) const { return lambdas.at(static_cast<size_t>(j - 1)); } // 1-based
};

/// Checks every lambda_j against the family's hypotheses: no lambda_j in
/// {-1, -2, ...}, and lambda_k - lambda_j never an integer for k != j.
LambdaConfig validate_config(std::vector<Rational> lambdas);

/// Series coefficient 1/[nu].
Rational phi_coefficient(const Rational& lambda, unsigned long nu);

/// Rigorous enclosure of sum_nu alpha^nu / [nu] at any point alpha of
/// Q(sqrt(-d)), as a (re, im) box of total width <= eps per part.
/// The series is entire, so there is no domain restriction. Enclosures for
/// smaller eps are nested inside those for larger eps.
ComplexEnclosure phi_enclosure(const Rational& lambda, const QuadRational& alpha, const Rational& eps);

} // namespace pade

#endif
