#include "proxmm/linop.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace proxmm {

Matrix LinearOperator::dense() const {
    Matrix out(rows(), cols());
    Vector e = Vector::Zero(cols());
    for (Index j = 0; j < cols(); ++j) {
        e[j] = 1.0;
        out.col(j) = apply(e);
        e[j] = 0.0;
    }
    return out;
}

DenseOperator::DenseOperator(Matrix a) : a_(std::move(a)) {}

Vector DenseOperator::apply(const Vector& x) const {
    if (x.size() != a_.cols()) throw std::invalid_argument("DenseOperator::apply: size mismatch");
    return a_ * x;
}

Vector DenseOperator::adjoint_apply(const Vector& u) const {
    if (u.size() != a_.rows())
        throw std::invalid_argument("DenseOperator::adjoint_apply: size mismatch");
    return a_.transpose() * u;
}

Vector ZeroOperator::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("ZeroOperator::apply: size mismatch");
    return Vector::Zero(rows_);
}

Vector ZeroOperator::adjoint_apply(const Vector& u) const {
    if (u.size() != rows_)
        throw std::invalid_argument("ZeroOperator::adjoint_apply: size mismatch");
    return Vector::Zero(cols_);
}

Vector IdentityOperator::apply(const Vector& x) const {
    if (x.size() != n_) throw std::invalid_argument("IdentityOperator::apply: size mismatch");
    return x;
}

Vector IdentityOperator::adjoint_apply(const Vector& u) const {
    if (u.size() != n_)
        throw std::invalid_argument("IdentityOperator::adjoint_apply: size mismatch");
    return u;
}

EdgeIncidenceOperator::EdgeIncidenceOperator(Index n_nodes, std::vector<Edge> edges,
                                             Index block_width)
    : n_(n_nodes), p_(block_width), edges_(std::move(edges)) {
    if (n_ < 2) throw std::invalid_argument("EdgeIncidenceOperator: need at least 2 nodes");
    if (p_ < 1) throw std::invalid_argument("EdgeIncidenceOperator: block width must be >= 1");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [i, j] = edges_[e];
        if (i < 0 || j >= n_ || i >= j)
            throw std::invalid_argument("EdgeIncidenceOperator: edge must satisfy 0 <= i < j < n");
        if (e > 0 && !(edges_[e - 1] < edges_[e]))
            throw std::invalid_argument("EdgeIncidenceOperator: edges must be sorted and unique");
    }
}

Vector EdgeIncidenceOperator::apply(const Vector& x) const {
    if (x.size() != cols())
        throw std::invalid_argument("EdgeIncidenceOperator::apply: size mismatch");
    Vector out(rows());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [i, j] = edges_[e];
        out.segment(static_cast<Index>(e) * p_, p_) =
            x.segment(i * p_, p_) - x.segment(j * p_, p_);
    }
    return out;
}

Vector EdgeIncidenceOperator::adjoint_apply(const Vector& u) const {
    if (u.size() != rows())
        throw std::invalid_argument("EdgeIncidenceOperator::adjoint_apply: size mismatch");
    Vector out = Vector::Zero(cols());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [i, j] = edges_[e];
        const auto block = u.segment(static_cast<Index>(e) * p_, p_);
        out.segment(i * p_, p_) += block;
        out.segment(j * p_, p_) -= block;
    }
    return out;
}

std::vector<int> EdgeIncidenceOperator::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [i, j] : edges_) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

namespace {

double binomial(int n, int k) {
    double c = 1.0;
    for (int t = 0; t < k; ++t) c = c * static_cast<double>(n - t) / static_cast<double>(t + 1);
    return c;
}

} // namespace

DifferenceOperator::DifferenceOperator(Index n, int k) : n_(n), k_(k) {
    if (k_ < 0) throw std::invalid_argument("DifferenceOperator: order k must be >= 0");
    if (n_ < k_ + 2) throw std::invalid_argument("DifferenceOperator: need n >= k + 2");
    stencil_.resize(static_cast<std::size_t>(k_) + 2);
    for (int d = 0; d <= k_ + 1; ++d) {
        const double sign = ((k_ + 1 + d) % 2 == 0) ? 1.0 : -1.0;
        stencil_[static_cast<std::size_t>(d)] = sign * binomial(k_ + 1, d);
    }
}

Vector DifferenceOperator::apply(const Vector& x) const {
    if (x.size() != n_) throw std::invalid_argument("DifferenceOperator::apply: size mismatch");
    Vector out = Vector::Zero(rows());
    for (Index i = 0; i < rows(); ++i) {
        double acc = 0.0;
        for (int d = 0; d <= k_ + 1; ++d) acc += stencil_[static_cast<std::size_t>(d)] * x[i + d];
        out[i] = acc;
    }
    return out;
}

Vector DifferenceOperator::adjoint_apply(const Vector& u) const {
    if (u.size() != rows())
        throw std::invalid_argument("DifferenceOperator::adjoint_apply: size mismatch");
    Vector out = Vector::Zero(n_);
    for (Index i = 0; i < rows(); ++i)
        for (int d = 0; d <= k_ + 1; ++d)
            out[i + d] += stencil_[static_cast<std::size_t>(d)] * u[i];
    return out;
}

double gershgorin_bound(const Matrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("gershgorin_bound: matrix not square");
    if (g.size() == 0) return 0.0;
    const double tol = 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff());
    if (((g - g.transpose()).cwiseAbs().maxCoeff() > tol))
        throw std::invalid_argument("gershgorin_bound: matrix not symmetric");
    double best = 0.0;
    for (Index i = 0; i < g.rows(); ++i) {
        double row = g(i, i);
        for (Index j = 0; j < g.cols(); ++j)
            if (j != i) row += std::abs(g(i, j));
        best = (i == 0) ? row : std::max(best, row);
    }
    return best;
}

Matrix gram_matrix(const LinearOperator& op) {
    Matrix g(op.cols(), op.cols());
    Vector e = Vector::Zero(op.cols());
    for (Index j = 0; j < op.cols(); ++j) {
        e[j] = 1.0;
        g.col(j) = op.adjoint_apply(op.apply(e));
        e[j] = 0.0;
    }
    return g;
}

PowerIterationResult power_iteration(const LinearOperator& op, double tol, int max_iters) {
    if (op.cols() < 1) throw std::invalid_argument("power_iteration: operator has no columns");
    if (tol <= 0.0) throw std::invalid_argument("power_iteration: tol must be positive");

    // Fixed start: all ones plus a perturbation on the first coordinate,
    // so the estimate is deterministic and never orthogonal to the
    // leading eigenvector of a graph Gram.
    Vector v = Vector::Ones(op.cols());
    v[0] += 1e-3;
    v /= v.norm();

    PowerIterationResult res;
    double prev = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        Vector w = op.adjoint_apply(op.apply(v));
        const double est = v.dot(w); // Rayleigh quotient, since ||v|| = 1
        res.lambda_max = est;
        res.iterations = it;
        if (it > 1 && std::abs(est - prev) <= tol * std::max(1.0, std::abs(est))) {
            res.converged = true;
            return res;
        }
        prev = est;
        const double wn = w.norm();
        if (wn == 0.0) { // A^T A v = 0: the operator is zero on this vector
            res.lambda_max = 0.0;
            res.converged = true;
            return res;
        }
        v = w / wn;
    }
    return res;
}

} // namespace proxmm
