#ifndef PADE_POLY_HPP
#define PADE_POLY_HPP

#include "pade/quadratic.hpp"
#include "pade/rational.hpp"

#include <vector>

namespace pade {

/// Dense polynomial over the rationals, coefficients stored low to high.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// trailing coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, size_t power);
    static Poly from_coefficients(std::vector<Rational> coeffs); // trims trailing zeros

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    Rational coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    QuadRational eval(const QuadRational& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Exact determinant of a square polynomial matrix (Laplace expansion;
/// intended for the small matrices that arise here).
Poly poly_determinant(const std::vector<std::vector<Poly>>& matrix);

} // namespace pade

#endif
