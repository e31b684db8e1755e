#pragma once

#include "proxmm/prox.hpp"
#include "proxmm/smooth.hpp"
#include "proxmm/solver_types.hpp"

namespace proxmm {

/// Proximal-gradient descent on F = f + g with fixed step eta,
/// 0 < eta <= 1/L_f.
///
/// accelerated = false iterates x <- prox_{eta g}(x - eta grad f(x)).
/// accelerated = true adds the momentum sequence alpha_1 = 1,
/// alpha_{j+1} = (1 + sqrt(1 + 4 alpha_j^2)) / 2,
/// u_{j+1} = z_j + ((alpha_j - 1)/alpha_{j+1}) (z_j - z_{j-1}),
/// with the gradient step taken at u.
///
/// Stops when the relative change of F falls below tol or after
/// max_iters iterations; a non-finite objective reports diverged.
/// The trace records one row per iteration with the objective at the
/// post-prox iterate.
SolverResult proximal_gradient(const SmoothTerm& f, const ProxTerm& g, Vector x0, double eta,
                               bool accelerated, double tol, int max_iters);

} // namespace proxmm
