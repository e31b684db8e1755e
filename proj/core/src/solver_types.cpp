#include "proxmm/solver_types.hpp"

#include <stdexcept>

namespace proxmm {

std::string to_string(SolverStatus status) {
    switch (status) {
        case SolverStatus::converged: return "converged";
        case SolverStatus::max_iters: return "max_iters";
        case SolverStatus::diverged: return "diverged";
    }
    return "unknown";
}

void SolverConfig::validate() const {
    if (!(nu1 > 0.0)) throw std::invalid_argument("SolverConfig: nu1 must be positive");
    if (nu_growth < 1.0) throw std::invalid_argument("SolverConfig: nu_growth must be >= 1");
    if (!(nu_max >= nu1)) throw std::invalid_argument("SolverConfig: nu_max must be >= nu1");
    if (!(outer_tol > 0.0) || !(inner_tol > 0.0))
        throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (outer_max < 1 || inner_max < 1)
        throw std::invalid_argument("SolverConfig: iteration caps must be >= 1");
}

long SolverResult::total_inner_iterations() const {
    long total = 0;
    for (const auto& row : trace) total += row.inner_iters;
    return total;
}

} // namespace proxmm
