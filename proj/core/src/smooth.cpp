#include "proxmm/smooth.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace proxmm {

UnitQuadratic::UnitQuadratic(Vector b) : b_(std::move(b)) {
    if (!b_.allFinite()) throw std::invalid_argument("UnitQuadratic: target must be finite");
}

double UnitQuadratic::value(const Vector& x) const { return 0.5 * (x - b_).squaredNorm(); }

Vector UnitQuadratic::gradient(const Vector& x) const { return x - b_; }

LeastSquares::LeastSquares(Matrix m, Vector y) : m_(std::move(m)), y_(std::move(y)) {
    if (m_.rows() != y_.size()) throw std::invalid_argument("LeastSquares: dimension mismatch");
    if (!m_.allFinite() || !y_.allFinite())
        throw std::invalid_argument("LeastSquares: data must be finite");
    const Matrix gram = m_.transpose() * m_;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
    lipschitz_ = eig.eigenvalues().maxCoeff();
    modulus_ = eig.eigenvalues().minCoeff();
}

double LeastSquares::value(const Vector& x) const { return 0.5 * (y_ - m_ * x).squaredNorm(); }

Vector LeastSquares::gradient(const Vector& x) const { return m_.transpose() * (m_ * x - y_); }

std::optional<double> LeastSquares::strong_convexity() const {
    if (modulus_ > 0.0) return modulus_;
    return std::nullopt;
}

} // namespace proxmm
