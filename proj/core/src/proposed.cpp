#include "proxmm/proposed.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "proxmm/proximal_gradient.hpp"

namespace proxmm {

Vector grad_phi1(const CompositeProblem& problem, const Vector& x, const Vector& lambda,
                 double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("grad_phi1: nu must be positive");
    if (x.size() != problem.dim() || lambda.size() != problem.constraint_dim())
        throw std::invalid_argument("grad_phi1: dimension mismatch");
    if (problem.constraint_dim() == 0) return problem.f().gradient(x);
    const Vector v = nu * problem.a().apply(x) + lambda;
    return problem.f().gradient(x) +
           problem.a().adjoint_apply(prox_scaled_conjugate(problem.h(), v, nu));
}

double phi1_value(const CompositeProblem& problem, const Vector& x, const Vector& lambda,
                  double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("phi1_value: nu must be positive");
    if (problem.constraint_dim() == 0) return problem.f().value(x);
    const Vector ax = problem.a().apply(x);
    const Vector y_star = problem.h().prox(ax + lambda / nu, 1.0 / nu);
    const Vector gap = ax - y_star;
    return problem.f().value(x) + problem.h().value(y_star) + lambda.dot(gap) +
           0.5 * nu * gap.squaredNorm();
}

double lipschitz_upper_bound(const CompositeProblem& problem, double nu) {
    if (nu < 0.0) throw std::invalid_argument("lipschitz_upper_bound: nu must be >= 0");
    return problem.f().lipschitz() + nu * problem.spectral_bound();
}

SolverResult solve_proposed(const CompositeProblem& problem, const SolverConfig& config,
                            Vector x0, Vector lambda0) {
    config.validate();
    if (x0.size() == 0) x0 = problem.initial_point();
    if (lambda0.size() == 0) lambda0 = Vector::Zero(problem.constraint_dim());
    if (x0.size() != problem.dim() || lambda0.size() != problem.constraint_dim())
        throw std::invalid_argument("solve_proposed: dimension mismatch");

    const auto start = std::chrono::steady_clock::now();
    const double bound = config.eta_mode == EtaMode::safe ? problem.spectral_bound()
                                                          : problem.spectral_bound_experiment();

    SolverResult res;
    Vector x = std::move(x0);
    Vector lambda = std::move(lambda0);
    double nu = config.nu1;

    for (int k = 1; k <= config.outer_max; ++k) {
        const double lip = problem.f().lipschitz() + nu * bound;
        const double eta = 1.0 / lip;

        FunctionalSmoothTerm phi1(
            problem.dim(), [&](const Vector& u) { return phi1_value(problem, u, lambda, nu); },
            [&](const Vector& u) { return grad_phi1(problem, u, lambda, nu); }, lip);

        SolverResult inner = proximal_gradient(phi1, problem.g(), x, eta, /*accelerated=*/true,
                                               config.inner_tol, config.inner_max);
        const double x_change = (inner.x_final - x).norm() / std::max(1.0, inner.x_final.norm());
        x = std::move(inner.x_final);

        // Eq.-(20) implicit splitting variable and the closed-form
        // multiplier step lambda <- prox_{nu h*}(lambda + nu Ax);
        // by the Moreau identity the two share one prox evaluation.
        const Vector ax = problem.a().apply(x);
        const Vector y_star = problem.constraint_dim() > 0
                                  ? problem.h().prox(ax + lambda / nu, 1.0 / nu)
                                  : Vector(0);
        const Vector residual_vec = ax - y_star;
        lambda += nu * residual_vec;

        const double primal = residual_vec.norm() / std::max(1.0, y_star.norm());
        const double obj = problem.objective(x);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        res.trace.push_back({k, inner.outer_iterations(), obj, primal, ms,
                             inner.status == SolverStatus::converged});

        if (!std::isfinite(obj) || inner.status == SolverStatus::diverged) {
            res.status = SolverStatus::diverged;
            break;
        }
        if (primal <= config.outer_tol && x_change <= config.outer_tol) {
            res.status = SolverStatus::converged;
            break;
        }
        nu = std::min(nu * config.nu_growth, config.nu_max);
    }

    res.x_final = std::move(x);
    res.lambda_final = std::move(lambda);
    return res;
}

} // namespace proxmm
