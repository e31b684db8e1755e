#include "proxmm/proximal_gradient.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace proxmm {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

SolverResult proximal_gradient(const SmoothTerm& f, const ProxTerm& g, Vector x0, double eta,
                               bool accelerated, double tol, int max_iters) {
    if (!(eta > 0.0) || eta > (1.0 + 1e-12) / f.lipschitz())
        throw std::invalid_argument("proximal_gradient: need 0 < eta <= 1/L_f");
    if (!(tol >= 0.0)) throw std::invalid_argument("proximal_gradient: tol must be >= 0");
    if (max_iters < 1) throw std::invalid_argument("proximal_gradient: max_iters must be >= 1");
    if (!x0.allFinite()) throw std::invalid_argument("proximal_gradient: x0 must be finite");

    const auto start = std::chrono::steady_clock::now();

    SolverResult res;
    Vector z = std::move(x0); // post-prox iterate
    Vector u = z;             // extrapolated point
    double alpha = 1.0;
    double obj_prev = f.value(z) + g.value(z);

    for (int k = 1; k <= max_iters; ++k) {
        const Vector& at = accelerated ? u : z;
        Vector z_next = g.prox(at - eta * f.gradient(at), eta);
        const double obj = f.value(z_next) + g.value(z_next);

        if (accelerated) {
            const double alpha_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha * alpha));
            u = z_next + ((alpha - 1.0) / alpha_next) * (z_next - z);
            alpha = alpha_next;
        }
        z = std::move(z_next);

        res.trace.push_back({k, 1, obj, 0.0, elapsed_ms(start)});

        if (!std::isfinite(obj)) {
            res.status = SolverStatus::diverged;
            break;
        }
        if (std::abs(obj - obj_prev) <= tol * std::max(1.0, std::abs(obj))) {
            res.status = SolverStatus::converged;
            break;
        }
        obj_prev = obj;
    }

    res.x_final = std::move(z);
    res.lambda_final = Vector();
    return res;
}

} // namespace proxmm
