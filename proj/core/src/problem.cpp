#include "proxmm/problem.hpp"

#include <stdexcept>

namespace proxmm {

CompositeProblem::CompositeProblem(std::shared_ptr<const SmoothTerm> f,
                                   std::shared_ptr<const ProxTerm> g,
                                   std::shared_ptr<const ProxTerm> h,
                                   std::shared_ptr<const LinearOperator> a, double spectral_bound)
    : f_(std::move(f)),
      g_(std::move(g)),
      h_(std::move(h)),
      a_(std::move(a)),
      spectral_bound_(spectral_bound),
      spectral_bound_experiment_(spectral_bound) {
    if (!f_ || !g_ || !h_ || !a_)
        throw std::invalid_argument("CompositeProblem: all terms must be provided");
    if (f_->dim() != a_->cols())
        throw std::invalid_argument("CompositeProblem: f and A disagree on the variable size");
    if (spectral_bound_ < 0.0)
        throw std::invalid_argument("CompositeProblem: spectral bound must be nonnegative");
    if (f_->lipschitz() < 0.0)
        throw std::invalid_argument("CompositeProblem: L_f must be nonnegative");
    initial_point_ = Vector::Zero(a_->cols());
}

void CompositeProblem::set_spectral_bound_experiment(double b) {
    if (b < 0.0)
        throw std::invalid_argument("CompositeProblem: experiment bound must be nonnegative");
    spectral_bound_experiment_ = b;
}

void CompositeProblem::set_initial_point(Vector x0) {
    if (x0.size() != a_->cols())
        throw std::invalid_argument("CompositeProblem: initial point has wrong size");
    initial_point_ = std::move(x0);
}

double CompositeProblem::objective(const Vector& x) const {
    return f_->value(x) + g_->value(x) + h_->value(a_->apply(x));
}

} // namespace proxmm
