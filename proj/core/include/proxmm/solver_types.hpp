#pragma once

#include <string>
#include <vector>

#include "proxmm/types.hpp"

namespace proxmm {

enum class SolverStatus { converged, max_iters, diverged };

std::string to_string(SolverStatus status);

enum class EtaMode { safe, experiment };

/// Shared solver knobs. nu applies to the penalty-based solvers;
/// the inner fields drive the subproblem iterations.
struct SolverConfig {
    double nu1 = 1.0;        // initial penalty
    double nu_growth = 1.1;  // multiplier per outer iteration, >= 1
    double nu_max = 1e6;     // penalty cap
    double outer_tol = 1e-5; // scaled primal-residual tolerance
    int outer_max = 1000;
    double inner_tol = 1e-8; // relative objective-change tolerance
    int inner_max = 500;
    EtaMode eta_mode = EtaMode::safe;

    /// Throws std::invalid_argument on nonpositive tolerances,
    /// nu_growth < 1, or nonpositive iteration caps.
    void validate() const;
};

struct TraceRow {
    int outer_iter = 0;
    int inner_iters = 0;
    double objective = 0.0;
    double primal_residual = 0.0;
    double wall_ms = 0.0;
    bool inner_converged = true;
};

struct SolverResult {
    Vector x_final;
    Vector lambda_final;
    std::vector<TraceRow> trace;
    SolverStatus status = SolverStatus::max_iters;

    int outer_iterations() const { return static_cast<int>(trace.size()); }
    long total_inner_iterations() const;
    double wall_ms() const { return trace.empty() ? 0.0 : trace.back().wall_ms; }
    double final_objective() const { return trace.empty() ? 0.0 : trace.back().objective; }
    double final_residual() const { return trace.empty() ? 0.0 : trace.back().primal_residual; }
};

} // namespace proxmm
