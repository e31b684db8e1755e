#include "proxmm/admm.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "proxmm/proximal_gradient.hpp"

namespace proxmm {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct MultiplierLoopHooks {
    // Computes the next x from (x, y, lambda, nu).
    std::function<XUpdateResult(const Vector&, const Vector&, const Vector&, double)> x_step;
    bool grow_nu = true;
};

SolverResult multiplier_loop(const CompositeProblem& problem, const SolverConfig& config,
                             double nu0, const MultiplierLoopHooks& hooks) {
    const auto start = std::chrono::steady_clock::now();

    SolverResult res;
    Vector x = problem.initial_point();
    Vector y = problem.a().apply(x);
    Vector lambda = Vector::Zero(problem.constraint_dim());
    double nu = nu0;

    for (int k = 1; k <= config.outer_max; ++k) {
        XUpdateResult upd = hooks.x_step(x, y, lambda, nu);
        x = std::move(upd.x);

        const Vector ax = problem.a().apply(x);
        Vector y_next = problem.constraint_dim() > 0
                            ? problem.h().prox(ax + lambda / nu, 1.0 / nu)
                            : Vector(0);
        lambda += nu * (ax - y_next);

        const double primal = (ax - y_next).norm() / std::max(1.0, y_next.norm());
        const double dual = nu * problem.a().adjoint_apply(y_next - y).norm() /
                            std::max(1.0, problem.a().adjoint_apply(lambda).norm());
        y = std::move(y_next);

        const double obj = problem.objective(x);
        res.trace.push_back({k, upd.iterations, obj, primal, elapsed_ms(start), upd.converged});

        if (!std::isfinite(obj)) {
            res.status = SolverStatus::diverged;
            break;
        }
        if (primal <= config.outer_tol && dual <= config.outer_tol) {
            res.status = SolverStatus::converged;
            break;
        }
        if (hooks.grow_nu) nu = std::min(nu * config.nu_growth, config.nu_max);
    }

    res.x_final = std::move(x);
    res.lambda_final = std::move(lambda);
    return res;
}

} // namespace

XUpdateResult fista_x_update(const CompositeProblem& problem, const Vector& x0, const Vector& y,
                             const Vector& lambda, double nu, double tol, int max_iters) {
    const double lip = problem.f().lipschitz() + nu * problem.spectral_bound();
    FunctionalSmoothTerm smooth(
        problem.dim(),
        [&](const Vector& u) {
            const Vector gap = problem.a().apply(u) - y;
            return problem.f().value(u) + lambda.dot(gap) + 0.5 * nu * gap.squaredNorm();
        },
        [&](const Vector& u) {
            const Vector gap = problem.a().apply(u) - y;
            return problem.f().gradient(u) + problem.a().adjoint_apply(lambda + nu * gap);
        },
        lip);
    SolverResult inner = proximal_gradient(smooth, problem.g(), x0, 1.0 / lip,
                                           /*accelerated=*/true, tol, max_iters);
    return {std::move(inner.x_final), inner.outer_iterations(),
            inner.status == SolverStatus::converged};
}

SolverResult admm(const CompositeProblem& problem, const AdmmXUpdate& x_update,
                  const SolverConfig& config) {
    config.validate();
    const AdmmXUpdate& chosen =
        x_update ? x_update : (problem.admm_x_update() ? problem.admm_x_update() : fista_x_update);

    MultiplierLoopHooks hooks;
    hooks.x_step = [&](const Vector& x, const Vector& y, const Vector& lambda, double nu) {
        return chosen(problem, x, y, lambda, nu, config.inner_tol, config.inner_max);
    };
    return multiplier_loop(problem, config, config.nu1, hooks);
}

SolverResult admm(const CompositeProblem& problem, const SolverConfig& config) {
    return admm(problem, AdmmXUpdate(), config);
}

SolverResult ama(const CompositeProblem& problem, const SolverConfig& config) {
    config.validate();
    const auto modulus = problem.f().strong_convexity();
    if (!modulus)
        throw std::invalid_argument("ama: f must be strongly convex");

    // Constant penalty kept inside the stable dual step range.
    const double nu = problem.spectral_bound() > 0.0
                          ? std::min(config.nu1, *modulus / problem.spectral_bound())
                          : config.nu1;

    MultiplierLoopHooks hooks;
    hooks.grow_nu = false;

    if (const auto* uq = dynamic_cast<const UnitQuadratic*>(&problem.f())) {
        hooks.x_step = [&problem, uq](const Vector&, const Vector&, const Vector& lambda,
                                      double) -> XUpdateResult {
            return {problem.g().prox(uq->target() - problem.a().adjoint_apply(lambda), 1.0), 1,
                    true};
        };
    } else if (const auto* ls = dynamic_cast<const LeastSquares*>(&problem.f());
               ls && dynamic_cast<const ZeroProx*>(&problem.g())) {
        auto llt = std::make_shared<Eigen::LLT<Matrix>>(
            Matrix(ls->design().transpose() * ls->design()));
        Vector rhs_fixed = ls->design().transpose() * ls->observations();
        hooks.x_step = [&problem, llt, rhs_fixed](const Vector&, const Vector&,
                                                  const Vector& lambda, double) -> XUpdateResult {
            return {llt->solve(rhs_fixed - problem.a().adjoint_apply(lambda)), 1, true};
        };
    } else {
        // Ordinary Lagrangian step solved iteratively: f is strongly
        // convex, so FISTA at step 1/L_f converges on f + <lambda, Ax> + g.
        hooks.x_step = [&problem, &config](const Vector& x, const Vector&, const Vector& lambda,
                                           double) -> XUpdateResult {
            const double lip = problem.f().lipschitz();
            FunctionalSmoothTerm smooth(
                problem.dim(),
                [&problem, &lambda](const Vector& u) {
                    return problem.f().value(u) + lambda.dot(problem.a().apply(u));
                },
                [&problem, &lambda](const Vector& u) {
                    return problem.f().gradient(u) + problem.a().adjoint_apply(lambda);
                },
                lip);
            SolverResult inner = proximal_gradient(smooth, problem.g(), x, 1.0 / lip,
                                                   /*accelerated=*/true, config.inner_tol,
                                                   config.inner_max);
            return {std::move(inner.x_final), inner.outer_iterations(),
                    inner.status == SolverStatus::converged};
        };
    }

    return multiplier_loop(problem, config, nu, hooks);
}

} // namespace proxmm
