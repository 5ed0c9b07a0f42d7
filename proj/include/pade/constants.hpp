#ifndef PADE_CONSTANTS_HPP
#define PADE_CONSTANTS_HPP

#include "pade/efunction.hpp"
#include "pade/interval.hpp"
#include "pade/quadratic.hpp"

namespace pade {

/// Enclosures of the growth constants controlling the scaled approximation
/// data at a point alpha = a/b of K, for a given row count m:
///   c1 = 6R(m+1) + 2|alpha|
///   c2 = log 8 + 3 log S + 6S(m+3)
///   c3 = log|b| + 12R(1+Sm)
///   c4 = log|b| + 2(m+1) log S + 6S(3+Sm)
///   c5 = c1 + c3 + log 2 + 2(S^2-1)|alpha|
///   c6 = c2 + c4 + 3 log 2 + 4 log S + 2 log max{1,|alpha|}
/// together with the derived b1 = c2+c4+2, b3 = c1+c3, e1 = c6+1, e3 = c5,
/// and N2 = max{b3, e3}.
struct BoundConstants {
    RatInterval c1, c2, c3, c4, c5, c6;
    RatInterval b1hat, b1, b3;
    RatInterval e1hat, e1, e3;
    RatInterval N2;

    // Formula inputs, recorded for reporting.
    Int R, S, Rhat, Shat;
    RatInterval abs_alpha;  // |alpha|
    RatInterval abs_b;      // |b|
    int m = 0;
    Rational eps;
};

/// The same aggregate grouped as a quadratic polynomial in m:
///   d0 = 3 + 3 log 2 + 5 log S + 36 S + log|b|
///   d1 = 1 + 6 log 2 + 9 log S + 36 S + log|b| + 2 log max{1,|alpha|}
///   d2 = 2 log S + 6 S + 6 S^2
struct DConstants {
    RatInterval d0, d1, d2;
};

/// Computes the constants for alpha = a/b (a, b in Z_K, b nonzero) with the
/// given row count m. Every log is natural. Enclosures are assembled from
/// eps-wide building blocks, so smaller eps gives nested outputs.
BoundConstants compute_constants(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b, int m,
                                 const Rational& eps);

DConstants compute_d_constants(const LambdaConfig& cfg, const QuadraticInt& a, const QuadraticInt& b,
                               const Rational& eps);

} // namespace pade

#endif
