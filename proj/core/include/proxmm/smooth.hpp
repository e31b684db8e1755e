#pragma once

#include <functional>
#include <optional>

#include "proxmm/types.hpp"

namespace proxmm {

/// Differentiable convex function f with a Lipschitz-continuous
/// gradient: ||grad f(x) - grad f(y)|| <= lipschitz() * ||x - y||.
class SmoothTerm {
public:
    virtual ~SmoothTerm() = default;

    virtual Index dim() const = 0;
    virtual double value(const Vector& x) const = 0;
    virtual Vector gradient(const Vector& x) const = 0;
    virtual double lipschitz() const = 0;

    /// Strong-convexity modulus when known; nullopt otherwise.
    virtual std::optional<double> strong_convexity() const { return std::nullopt; }
};

/// f(x) = 1/2 ||x - b||^2, gradient x - b, L = 1, modulus 1.
class UnitQuadratic final : public SmoothTerm {
public:
    explicit UnitQuadratic(Vector b);

    Index dim() const override { return b_.size(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    double lipschitz() const override { return 1.0; }
    std::optional<double> strong_convexity() const override { return 1.0; }

    const Vector& target() const { return b_; }

private:
    Vector b_;
};

/// f(x) = 1/2 ||y - M x||^2 with L = lambda_max(M^T M). The modulus is
/// lambda_min(M^T M); both are computed once at construction.
class LeastSquares final : public SmoothTerm {
public:
    LeastSquares(Matrix m, Vector y);

    Index dim() const override { return m_.cols(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    double lipschitz() const override { return lipschitz_; }
    std::optional<double> strong_convexity() const override;

    const Matrix& design() const { return m_; }
    const Vector& observations() const { return y_; }

private:
    Matrix m_;
    Vector y_;
    double lipschitz_ = 0.0;
    double modulus_ = 0.0;
};

/// Smooth term defined by callables; used for ad-hoc subproblems.
class FunctionalSmoothTerm final : public SmoothTerm {
public:
    FunctionalSmoothTerm(Index dim, std::function<double(const Vector&)> value,
                         std::function<Vector(const Vector&)> gradient, double lipschitz,
                         std::optional<double> modulus = std::nullopt)
        : dim_(dim),
          value_(std::move(value)),
          gradient_(std::move(gradient)),
          lipschitz_(lipschitz),
          modulus_(modulus) {}

    Index dim() const override { return dim_; }
    double value(const Vector& x) const override { return value_(x); }
    Vector gradient(const Vector& x) const override { return gradient_(x); }
    double lipschitz() const override { return lipschitz_; }
    std::optional<double> strong_convexity() const override { return modulus_; }

private:
    Index dim_;
    std::function<double(const Vector&)> value_;
    std::function<Vector(const Vector&)> gradient_;
    double lipschitz_;
    std::optional<double> modulus_;
};

} // namespace proxmm
