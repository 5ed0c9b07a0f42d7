#ifndef PADE_BAKER_HPP
#define PADE_BAKER_HPP

#include "pade/constants.hpp"
#include "pade/efunction.hpp"

#include <cstdint>

namespace pade {

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class NoBracketError : public std::runtime_error {
public:
    explicit NoBracketError(const std::string& what) : std::runtime_error(what) {}
};

/// A linear form beta_0 + beta_1 f_1(alpha) + ... + beta_m f_m(alpha) over
/// Z_K, with the height data H = prod max{1, |beta_j|} carried as exact
/// squares.
struct LinearForm {
    std::vector<QuadraticInt> beta; // size m+1, beta_0 first; not all zero
    QuadraticInt alpha_num = QuadraticInt(Int(1));
    QuadraticInt alpha_den = QuadraticInt(Int(1));

    static LinearForm create(std::vector<QuadraticInt> beta, QuadraticInt a, QuadraticInt b);

    int m() const { return static_cast<int>(beta.size()) - 1; }
    /// max{1, |beta_j|^2}, exact (j = 1..m).
    Rational h_squared(int j) const;
    /// prod_j h_j^2, exact.
    Rational H_squared() const;
    RatInterval log_H(const Rational& eps) const;
    /// log of (2m)^m H.
    RatInterval log_H_hat(const Rational& eps) const;
};

/// Enclosure of the largest root of x log x = 2 e1 m (x + m), intersected
/// with [1, inf). The root is bracketed in log space and bisected to
/// relative width below 1e-11.
RatInterval solve_x2(const RatInterval& e1, int m);

/// The gate 2 log Hhat >= max{2 log N2, x2 log x2, e^e}.
Tristate admissibility(const LinearForm& form, const BoundConstants& constants);

/// Enclosure of
///   (2^(m+1) e^(m(1+b1+e1 m)))^(-1) (loglog Hh / log Hh)^m
///       * Hh^(-1-4(1+b1+e1 m)/loglog Hh)
/// for Hh = (2m)^m H. Throws DomainError unless Hh > e^e.
RatInterval corollary_bound(const LinearForm& form, const BoundConstants& constants, const Rational& eps);

/// Enclosure of H^(-1-6(d0+d1 m+d2 m^2)/loglog H). Throws DomainError unless
/// H > e^e.
RatInterval theorem_bound(const LinearForm& form, const DConstants& d, const Rational& eps);

/// Encloses the value of the form, one series enclosure per term with the
/// width budget split across terms.
ComplexEnclosure evaluate_linear_form(const LinearForm& form, const LambdaConfig& cfg, const Rational& eps);

struct BoundReport {
    BoundConstants constants;
    DConstants d;
    RatInterval x2;
    Tristate admissible = Tristate::undecided;

    bool have_corollary = false;
    bool have_theorem = false;
    RatInterval corollary;
    RatInterval theorem;

    ComplexEnclosure value;
    RatInterval value_abs_squared;

    /// |value| > theorem bound; tagged empirical unless admissibility holds.
    Tristate comparison = Tristate::undecided;
    bool comparison_empirical = true;

    /// Direct sum 1 + b1 + e1 m against the grouped form d0 + d1 m + d2 m^2,
    /// recorded side by side with their overlap flag. The regrouped form
    /// d0 + (d1+d2) m + d2 m^2 equals the direct sum exactly.
    RatInterval identity_lhs, identity_rhs;
    bool identity_overlap = false;
};

BoundReport certify_form(const LinearForm& form, const LambdaConfig& cfg, const Rational& eps);

/// Deterministic PRNG, stable across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state = 0;
    std::uint64_t next();
    long uniform(long lo, long hi); // inclusive bounds
};

struct StressSummary {
    unsigned long trials = 0;
    unsigned long violations = 0;      // |value| enclosure entirely below the bound
    unsigned long skipped_small_h = 0; // H <= e^e, bound undefined
    unsigned long undecided = 0;       // comparison not separated at fixed eps
    unsigned long zero_enclosures = 0; // value enclosure contained 0
    bool have_min_ratio = false;
    Rational min_ratio_lo; // smallest certified lower bound of |value|/bound
    std::uint64_t seed = 0;
    long box = 1000;
};

/// Samples `trials` random nonzero coefficient vectors with entries in
/// [-box, box] (both coordinates for imaginary quadratic fields) and compares
/// each |value| enclosure against the bound. Fully deterministic for a fixed
/// seed.
StressSummary stress_run(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b, unsigned long trials,
                         std::uint64_t seed, long box, unsigned long field_d);

} // namespace pade

#endif
