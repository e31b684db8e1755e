#pragma once

#include <vector>

#include "proxmm/problem.hpp"
#include "proxmm/solver_types.hpp"

namespace proxmm {

/// Sparse convex clustering over U in R^{n x p}:
///   1/2 ||X - U||_F^2
///   + gamma1 sum_{(i,j) in E} w_(i,j) ||U_i - U_j||_2
///   + gamma2 sum_j r_j ||u_j||_2.
/// Edges are 0-based with i < j; only positive-weight pairs belong to
/// the edge set.
struct SCCSpec {
    Matrix x;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    std::vector<Edge> edges;
    Vector edge_weights;   // one per edge, nonnegative
    Vector column_weights; // r_j; empty means all ones
};

/// l1 trend filtering: 1/2 ||y - x||^2 + gamma ||D^(k+1) x||_1.
struct TrendFilterSpec {
    Vector y;
    int order = 1; // k >= 0
    double gamma = 0.0;
};

struct WeightedEdges {
    std::vector<Edge> edges;
    Vector weights;
};

/// Lasso fixture 1/2 ||y - X beta||^2 + lambda ||beta||_1 in the two
/// equivalent encodings: as_constraint = false keeps the penalty in g
/// (plain proximal-gradient form, A = 0); as_constraint = true moves
/// it to h with A = I, exercising the constraint-based solvers.
CompositeProblem build_lasso(const Matrix& x, const Vector& y, double lambda, bool as_constraint);

/// Gaussian kernel weights w_ij = v * exp(-phi ||X_i - X_j||^2) on the
/// symmetrized k-nearest-neighbor graph (union of both directions).
/// Distance ties break toward the lower index.
WeightedEdges knn_gaussian_weights(const Matrix& x, int k, double phi, double v);

/// Assembles the clustering problem with U flattened row-major:
/// f = 1/2 ||U - X||_F^2, g = column group norm, h = edge group norm,
/// A = edge incidence. The spectral bound is 2 max_i G_ii with
/// G_ii the node degree; the experiment bound drops the factor 2.
CompositeProblem build_scc(const SCCSpec& spec);

/// Assembles trend filtering: f = 1/2 ||y - x||^2, g = 0,
/// h = gamma ||.||_1, A = D^(k+1), spectral bound 4^(k+1). The ADMM
/// x-update is attached in closed form (banded Cholesky solve).
CompositeProblem build_trend_filter(const TrendFilterSpec& spec);

/// Inner step for clustering: 1/(1 + 2 nu G_max) in safe mode,
/// 1/(1 + nu G_max) in experiment mode.
double scc_step_size(double nu, double g_diag_max, EtaMode mode);

/// Inner step for trend filtering: 1/(1 + nu 4^(k+1)).
double tf_step_size(double nu, int k);

} // namespace proxmm
