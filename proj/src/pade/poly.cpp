#include "pade/poly.hpp"

namespace pade {

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(const Rational& c, size_t power) {
    Poly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_[power] = c;
    return p;
}

Poly Poly::from_coefficients(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    Poly p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadRational Poly::eval(const QuadRational& x) const {
    QuadRational acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + QuadRational(*it);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly::from_coefficients(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Poly::from_coefficients(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly::from_coefficients(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return Poly::from_coefficients(std::move(c));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeffs_[i].str();
        if (i == 1) s += "*z";
        else if (i > 1) s += "*z^" + std::to_string(i);
    }
    return s;
}

namespace {

Poly det_recursive(const std::vector<std::vector<Poly>>& m, std::vector<size_t>& cols, size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    Poly acc;
    for (size_t idx = 0; idx < cols.size(); ++idx) {
        size_t col = cols[idx];
        if (m[row][col].is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != idx) rest.push_back(cols[k]);
        Poly sub = det_recursive(m, rest, row + 1);
        Poly term = m[row][col] * sub;
        acc = idx % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Poly poly_determinant(const std::vector<std::vector<Poly>>& matrix) {
    const size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("poly_determinant: matrix not square");
    if (n == 0) return Poly::constant(Rational(1));
    std::vector<size_t> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = i;
    return det_recursive(matrix, cols, 0);
}

} // namespace pade
