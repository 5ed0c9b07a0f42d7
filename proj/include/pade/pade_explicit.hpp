#ifndef PADE_PADE_EXPLICIT_HPP
#define PADE_PADE_EXPLICIT_HPP

#include "pade/pade_system.hpp"

namespace pade {

/// Row-0 coefficients a_0..a_N in closed form: a_N = -1/N!, and for k < N
/// k! a_k is the alternating binomial double sum over the vanishing nodes,
/// with denominator factors (node_sigma - node_s), s != sigma.
std::vector<Rational> q0_coefficients(const LambdaConfig& cfg, const DegreeVector& deg);

/// Row-i coefficients a_0..a_N in closed form:
/// k! a_k = sum_tau (-1)^(k-tau) C(k,tau) prod_s (tau - z_s)/(u - z_s),
/// u the unit node and z_s the zero nodes of the row.
std::vector<Rational> qi_coefficients(const LambdaConfig& cfg, const DegreeVector& deg, int i);

/// Assembles all m+1 rows from either the closed-form coefficients or the
/// exact linear-system solver, and checks the structural invariants.
PadeSystem build_system(const LambdaConfig& cfg, const DegreeVector& deg, Source source);

} // namespace pade

#endif
