#pragma once

#include "proxmm/problem.hpp"
#include "proxmm/solver_types.hpp"

namespace proxmm {

/// ADMM on the split min f(x) + g(x) + h(y) s.t. Ax = y:
/// x-update through the supplied subproblem solver, then
/// y <- prox_{h/nu}(Ax + lambda/nu) and lambda <- lambda + nu (Ax - y).
/// Stops when the scaled primal residual ||Ax - y|| and the scaled
/// dual residual nu ||A^T (y_k - y_{k-1})|| both fall below outer_tol.
///
/// Passing an empty x_update uses the problem's attached updater, or
/// an inner-FISTA subproblem solve when none is attached.
SolverResult admm(const CompositeProblem& problem, const AdmmXUpdate& x_update,
                  const SolverConfig& config);

/// admm() with the problem-attached (or fallback) x-update.
SolverResult admm(const CompositeProblem& problem, const SolverConfig& config);

/// Alternating minimization algorithm: the ADMM loop with the
/// quadratic penalty dropped from the x-update, i.e.
/// x <- argmin_x f(x) + g(x) + <lambda, Ax>. Requires strongly convex
/// f and runs with the constant penalty min(nu1, mu_f / spectral_bound),
/// the safe step for the equivalent proximal-gradient method on the
/// dual; nu_growth is ignored.
SolverResult ama(const CompositeProblem& problem, const SolverConfig& config);

/// Inner-FISTA subproblem solver for the ADMM x-update; exposed for
/// problems whose x-step has no closed form (nonzero g).
XUpdateResult fista_x_update(const CompositeProblem& problem, const Vector& x0, const Vector& y,
                             const Vector& lambda, double nu, double tol, int max_iters);

} // namespace proxmm
