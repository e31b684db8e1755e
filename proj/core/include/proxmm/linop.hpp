#pragma once

#include <utility>
#include <vector>

#include "proxmm/types.hpp"

namespace proxmm {

/// Linear map A : R^cols -> R^rows with access to the adjoint.
/// Operators are immutable after construction and safe to share
/// across concurrent solver runs.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;

    virtual Index rows() const = 0;
    virtual Index cols() const = 0;

    /// A x, expects x.size() == cols().
    virtual Vector apply(const Vector& x) const = 0;

    /// A^T u, expects u.size() == rows().
    virtual Vector adjoint_apply(const Vector& u) const = 0;

    /// Materializes A as a dense matrix (column-by-column apply).
    Matrix dense() const;
};

class DenseOperator final : public LinearOperator {
public:
    explicit DenseOperator(Matrix a);

    Index rows() const override { return a_.rows(); }
    Index cols() const override { return a_.cols(); }
    Vector apply(const Vector& x) const override;
    Vector adjoint_apply(const Vector& u) const override;

    const Matrix& matrix() const { return a_; }

private:
    Matrix a_;
};

/// The m x n zero map. Rows may be 0, which encodes "no constraint":
/// apply returns an empty vector and the adjoint returns zeros.
class ZeroOperator final : public LinearOperator {
public:
    ZeroOperator(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    Index rows() const override { return rows_; }
    Index cols() const override { return cols_; }
    Vector apply(const Vector& x) const override;
    Vector adjoint_apply(const Vector& u) const override;

private:
    Index rows_;
    Index cols_;
};

class IdentityOperator final : public LinearOperator {
public:
    explicit IdentityOperator(Index n) : n_(n) {}

    Index rows() const override { return n_; }
    Index cols() const override { return n_; }
    Vector apply(const Vector& x) const override;
    Vector adjoint_apply(const Vector& u) const override;

private:
    Index n_;
};

/// Undirected edge between nodes i < j, 0-based.
struct Edge {
    int i = 0;
    int j = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge-incidence operator A_E acting on a row-major flattened
/// matrix variable U in R^{n x p}: per edge (i,j) the output block is
/// the row difference U_i - U_j. One +1 and one -1 per edge row when
/// p = 1.
class EdgeIncidenceOperator final : public LinearOperator {
public:
    /// Edges must be unique, sorted, with 0 <= i < j < n_nodes.
    EdgeIncidenceOperator(Index n_nodes, std::vector<Edge> edges, Index block_width = 1);

    Index rows() const override { return static_cast<Index>(edges_.size()) * p_; }
    Index cols() const override { return n_ * p_; }
    Vector apply(const Vector& x) const override;
    Vector adjoint_apply(const Vector& u) const override;

    Index n_nodes() const { return n_; }
    Index block_width() const { return p_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Node degrees = diagonal of the n x n Gram G = A^T A at p = 1.
    std::vector<int> degrees() const;

private:
    Index n_;
    Index p_;
    std::vector<Edge> edges_;
};

/// Difference operator D^(k+1) in R^{(n-k-1) x n}; row i applies the
/// stencil c_d = (-1)^{k+1+d} * C(k+1, d), d = 0..k+1, at offset i.
/// Satisfies D^(k+1) = D^(1) D^(k).
class DifferenceOperator final : public LinearOperator {
public:
    /// Requires n >= k + 2 so the operator has at least one row.
    DifferenceOperator(Index n, int k);

    Index rows() const override { return n_ - (k_ + 1); }
    Index cols() const override { return n_; }
    Vector apply(const Vector& x) const override;
    Vector adjoint_apply(const Vector& u) const override;

    int order() const { return k_; }
    const std::vector<double>& stencil() const { return stencil_; }

private:
    Index n_;
    int k_;
    std::vector<double> stencil_;
};

/// max_i (g_ii + sum_{j != i} |g_ij|) for symmetric G; an upper bound
/// on lambda_max(G). Rejects non-square or asymmetric input.
double gershgorin_bound(const Matrix& g);

/// Dense A^T A, built with one adjoint_apply per column of A applied
/// to the canonical basis images.
Matrix gram_matrix(const LinearOperator& op);

struct PowerIterationResult {
    double lambda_max = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Estimates lambda_max(A^T A) by power iteration on the Gram map.
/// Starts from the normalized all-ones vector with a fixed perturbation
/// on the first coordinate, so results are reproducible.
PowerIterationResult power_iteration(const LinearOperator& op, double tol = 1e-10,
                                     int max_iters = 10000);

} // namespace proxmm
