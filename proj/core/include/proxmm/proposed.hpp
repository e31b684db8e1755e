#pragma once

#include "proxmm/problem.hpp"
#include "proxmm/solver_types.hpp"

namespace proxmm {

/// Gradient of the smooth envelope
///   phi1(x) = f(x) + min_y { h(y) + <lambda, Ax - y> + (nu/2)||Ax - y||^2 },
/// namely grad f(x) + A^T prox_{nu h*}(nu Ax + lambda), with the
/// conjugate prox realized from the primal prox of h.
Vector grad_phi1(const CompositeProblem& problem, const Vector& x, const Vector& lambda,
                 double nu);

/// phi1(x) evaluated through the inner minimizer
/// y*(x) = prox_{h/nu}(Ax + lambda/nu).
double phi1_value(const CompositeProblem& problem, const Vector& x, const Vector& lambda,
                  double nu);

/// L_f + nu * spectral_bound, a Lipschitz constant for grad phi1.
/// The matching inner step size is 1 / lipschitz_upper_bound.
double lipschitz_upper_bound(const CompositeProblem& problem, double nu);

/// Method-of-multipliers solver for min f(x) + g(x) + h(Ax).
///
/// Each outer iteration minimizes phi1 + g by an inner FISTA run
/// (warm-started at the previous x, step 1/(L_f + nu_k * bound)) and
/// then updates the multiplier in closed form,
///   lambda <- prox_{nu h*}(lambda + nu A x),
/// after which nu grows by nu_growth up to nu_max. The splitting
/// variable y is never stored: the stopping rule measures
/// ||Ax - y*(x)|| / max(1, ||y*(x)||) against outer_tol, together with
/// the relative x-change. eta_mode picks which spectral bound feeds
/// the inner step.
///
/// x0 / lambda0 may be empty to request the problem's initial point
/// and a zero multiplier.
SolverResult solve_proposed(const CompositeProblem& problem, const SolverConfig& config,
                            Vector x0 = Vector(), Vector lambda0 = Vector());

} // namespace proxmm
