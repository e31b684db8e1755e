#include "proxmm/problems.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace proxmm {

namespace {

Vector flatten_row_major(const Matrix& m) {
    Vector v(m.size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

// Single-entry factorization cache for penalty-dependent x-updates.
// Guarded so shared problems stay safe under concurrent solves.
template <typename Solver>
struct FactorCache {
    std::mutex mutex;
    double nu = -1.0;
    Solver solver;
};

} // namespace

CompositeProblem build_lasso(const Matrix& x, const Vector& y, double lambda,
                             bool as_constraint) {
    if (lambda < 0.0) throw std::invalid_argument("build_lasso: lambda must be nonnegative");
    if (x.rows() != y.size()) throw std::invalid_argument("build_lasso: dimension mismatch");
    if (!x.allFinite() || !y.allFinite())
        throw std::invalid_argument("build_lasso: data must be finite");

    auto f = std::make_shared<LeastSquares>(x, y);
    const Index p = x.cols();

    if (!as_constraint) {
        CompositeProblem problem(f, std::make_shared<L1Prox>(lambda), std::make_shared<ZeroProx>(),
                                 std::make_shared<ZeroOperator>(0, p), 0.0);
        return problem;
    }

    CompositeProblem problem(f, std::make_shared<ZeroProx>(), std::make_shared<L1Prox>(lambda),
                             std::make_shared<IdentityOperator>(p), 1.0);

    // x-update of the ADMM split: (X^T X + nu I) beta = X^T y - lambda + nu z.
    auto cache = std::make_shared<FactorCache<Eigen::LLT<Matrix>>>();
    Matrix gram = x.transpose() * x;
    Vector xty = x.transpose() * y;
    problem.set_admm_x_update([cache, gram, xty](const CompositeProblem&, const Vector&,
                                                 const Vector& z, const Vector& lam, double nu,
                                                 double, int) -> XUpdateResult {
        std::scoped_lock lock(cache->mutex);
        if (cache->nu != nu) {
            Matrix shifted = gram;
            shifted.diagonal().array() += nu;
            cache->solver.compute(shifted);
            cache->nu = nu;
        }
        return {cache->solver.solve(xty - lam + nu * z), 1, true};
    });
    return problem;
}

WeightedEdges knn_gaussian_weights(const Matrix& x, int k, double phi, double v) {
    const Index n = x.rows();
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("knn_gaussian_weights: need 1 <= k <= n - 1");
    if (phi < 0.0) throw std::invalid_argument("knn_gaussian_weights: phi must be nonnegative");
    if (v < 0.0) throw std::invalid_argument("knn_gaussian_weights: v must be nonnegative");

    Matrix sq_dist(n, n);
    for (Index i = 0; i < n; ++i) {
        sq_dist(i, i) = 0.0;
        for (Index j = i + 1; j < n; ++j) {
            const double d = (x.row(i) - x.row(j)).squaredNorm();
            sq_dist(i, j) = d;
            sq_dist(j, i) = d;
        }
    }

    std::vector<std::pair<int, int>> pairs; // symmetrized union, i < j
    for (Index i = 0; i < n; ++i) {
        std::vector<Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Index{0});
        std::erase(order, i);
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
            return sq_dist(i, a) != sq_dist(i, b) ? sq_dist(i, a) < sq_dist(i, b) : a < b;
        });
        for (int t = 0; t < k; ++t) {
            const Index j = order[static_cast<std::size_t>(t)];
            pairs.emplace_back(static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    WeightedEdges out;
    std::vector<double> w;
    for (const auto& [i, j] : pairs) {
        const double wij = v * std::exp(-phi * sq_dist(i, j));
        if (wij > 0.0) {
            out.edges.push_back({i, j});
            w.push_back(wij);
        }
    }
    out.weights = Vector::Zero(static_cast<Index>(w.size()));
    for (std::size_t e = 0; e < w.size(); ++e) out.weights[static_cast<Index>(e)] = w[e];
    return out;
}

CompositeProblem build_scc(const SCCSpec& spec) {
    const Index n = spec.x.rows();
    const Index p = spec.x.cols();
    if (n < 1 || p < 1) throw std::invalid_argument("build_scc: empty data matrix");
    if (spec.gamma1 < 0.0 || spec.gamma2 < 0.0)
        throw std::invalid_argument("build_scc: regularization must be nonnegative");
    if (static_cast<Index>(spec.edges.size()) != spec.edge_weights.size())
        throw std::invalid_argument("build_scc: one weight per edge required");
    if ((spec.edge_weights.array() < 0.0).any())
        throw std::invalid_argument("build_scc: edge weights must be nonnegative");

    Vector r = spec.column_weights;
    if (r.size() == 0) r = Vector::Ones(p);
    if (r.size() != p) throw std::invalid_argument("build_scc: column weights have wrong size");
    if ((r.array() < 0.0).any())
        throw std::invalid_argument("build_scc: column weights must be nonnegative");

    // The edge set holds exactly the positive-weight pairs.
    std::vector<Edge> edges;
    std::vector<double> w;
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        if (spec.edge_weights[static_cast<Index>(e)] > 0.0) {
            edges.push_back(spec.edges[e]);
            w.push_back(spec.edge_weights[static_cast<Index>(e)]);
        }
    }

    auto a = std::make_shared<EdgeIncidenceOperator>(n, std::move(edges), p);
    const auto degrees = a->degrees();
    const int max_degree = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());

    Vector edge_w = spec.gamma1 * Eigen::Map<const Vector>(w.data(), static_cast<Index>(w.size()));
    auto h = std::make_shared<GroupL2Prox>(
        GroupStructure::contiguous_blocks(static_cast<Index>(w.size()), p, edge_w));
    auto g = std::make_shared<GroupL2Prox>(
        GroupStructure::matrix_columns(n, p, spec.gamma2 * r));
    auto f = std::make_shared<UnitQuadratic>(flatten_row_major(spec.x));

    CompositeProblem problem(f, g, h, a, 2.0 * max_degree);
    problem.set_spectral_bound_experiment(static_cast<double>(max_degree));
    problem.set_initial_point(flatten_row_major(spec.x));
    return problem;
}

CompositeProblem build_trend_filter(const TrendFilterSpec& spec) {
    const Index n = spec.y.size();
    if (spec.order < 0) throw std::invalid_argument("build_trend_filter: order must be >= 0");
    if (n < spec.order + 2)
        throw std::invalid_argument("build_trend_filter: need n >= k + 2");
    if (spec.gamma < 0.0)
        throw std::invalid_argument("build_trend_filter: gamma must be nonnegative");

    auto a = std::make_shared<DifferenceOperator>(n, spec.order);
    auto f = std::make_shared<UnitQuadratic>(spec.y);
    const double bound = std::pow(4.0, spec.order + 1);

    CompositeProblem problem(f, std::make_shared<ZeroProx>(),
                             std::make_shared<L1Prox>(spec.gamma), a, bound);
    problem.set_initial_point(spec.y);

    // x-update of the ADMM split: (I + nu D^T D) x = y - D^T lam + nu D^T z,
    // with the banded Gram factored once per penalty value.
    Eigen::SparseMatrix<double> gram(n, n);
    {
        std::vector<Eigen::Triplet<double>> trip;
        const auto& s = a->stencil();
        const Index m = a->rows();
        for (Index row = 0; row < m; ++row)
            for (std::size_t d1 = 0; d1 < s.size(); ++d1)
                for (std::size_t d2 = 0; d2 < s.size(); ++d2)
                    trip.emplace_back(row + static_cast<Index>(d1), row + static_cast<Index>(d2),
                                      s[d1] * s[d2]);
        gram.setFromTriplets(trip.begin(), trip.end());
    }
    Eigen::SparseMatrix<double> identity(n, n);
    identity.setIdentity();

    auto cache =
        std::make_shared<FactorCache<Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>>>();
    Vector y_obs = spec.y;
    problem.set_admm_x_update([cache, gram, identity, y_obs](
                                  const CompositeProblem& prob, const Vector&, const Vector& z,
                                  const Vector& lam, double nu, double, int) -> XUpdateResult {
        std::scoped_lock lock(cache->mutex);
        if (cache->nu != nu) {
            cache->solver.compute(Eigen::SparseMatrix<double>(identity + nu * gram));
            cache->nu = nu;
        }
        return {cache->solver.solve(y_obs + prob.a().adjoint_apply(nu * z - lam)), 1, true};
    });
    return problem;
}

double scc_step_size(double nu, double g_diag_max, EtaMode mode) {
    if (nu < 0.0 || g_diag_max < 0.0)
        throw std::invalid_argument("scc_step_size: arguments must be nonnegative");
    const double factor = mode == EtaMode::safe ? 2.0 : 1.0;
    return 1.0 / (1.0 + factor * nu * g_diag_max);
}

double tf_step_size(double nu, int k) {
    if (nu < 0.0 || k < 0) throw std::invalid_argument("tf_step_size: invalid arguments");
    return 1.0 / (1.0 + nu * std::pow(4.0, k + 1));
}

} // namespace proxmm
