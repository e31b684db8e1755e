#pragma once

#include <functional>
#include <memory>

#include "proxmm/linop.hpp"
#include "proxmm/prox.hpp"
#include "proxmm/smooth.hpp"

namespace proxmm {

class CompositeProblem;

struct XUpdateResult {
    Vector x;
    int iterations = 1;
    bool converged = true;
};

/// Subproblem solver used by the ADMM x-update:
/// argmin_x f(x) + g(x) + <lambda, Ax - y> + (nu/2) ||Ax - y||^2,
/// solved to `tol` starting from `x0`. Problems attach a closed-form
/// updater when one exists; otherwise the solver falls back to an
/// inner FISTA on the same objective.
using AdmmXUpdate = std::function<XUpdateResult(const CompositeProblem&, const Vector& x0,
                                                const Vector& y, const Vector& lambda, double nu,
                                                double tol, int max_iters)>;

/// The composite problem min_x f(x) + g(x) + h(Ax): the single input
/// to every solver. Immutable once built; shareable across threads.
class CompositeProblem {
public:
    CompositeProblem(std::shared_ptr<const SmoothTerm> f, std::shared_ptr<const ProxTerm> g,
                     std::shared_ptr<const ProxTerm> h, std::shared_ptr<const LinearOperator> a,
                     double spectral_bound);

    const SmoothTerm& f() const { return *f_; }
    const ProxTerm& g() const { return *g_; }
    const ProxTerm& h() const { return *h_; }
    const LinearOperator& a() const { return *a_; }

    Index dim() const { return a_->cols(); }
    Index constraint_dim() const { return a_->rows(); }

    /// Upper bound on lambda_max(A^T A) with a convergence guarantee
    /// (Gershgorin-derived for the structured operators).
    double spectral_bound() const { return spectral_bound_; }

    /// Looser bound used by eta_mode = experiment; defaults to the
    /// safe bound when no alternative is known.
    double spectral_bound_experiment() const { return spectral_bound_experiment_; }
    void set_spectral_bound_experiment(double b);

    /// Suggested starting point; zeros unless the builder set one.
    const Vector& initial_point() const { return initial_point_; }
    void set_initial_point(Vector x0);

    /// Optional closed-form ADMM x-update supplied by the builder.
    const AdmmXUpdate& admm_x_update() const { return admm_x_update_; }
    void set_admm_x_update(AdmmXUpdate update) { admm_x_update_ = std::move(update); }

    /// f(x) + g(x) + h(Ax).
    double objective(const Vector& x) const;

private:
    std::shared_ptr<const SmoothTerm> f_;
    std::shared_ptr<const ProxTerm> g_;
    std::shared_ptr<const ProxTerm> h_;
    std::shared_ptr<const LinearOperator> a_;
    double spectral_bound_;
    double spectral_bound_experiment_;
    Vector initial_point_;
    AdmmXUpdate admm_x_update_;
};

} // namespace proxmm
