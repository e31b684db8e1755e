#pragma once

#include <functional>
#include <vector>

#include "proxmm/types.hpp"

namespace proxmm {

/// Convex function with an evaluable proximal map. prox(v, t) solves
/// argmin_x { value(x) + (1/2t) ||v - x||^2 } for t > 0. All
/// implementations are nonexpansive maps and pure functions.
class ProxTerm {
public:
    virtual ~ProxTerm() = default;

    virtual double value(const Vector& x) const = 0;
    virtual Vector prox(const Vector& v, double t) const = 0;
};

/// Coordinatewise soft threshold sign(v_i) * max(0, |v_i| - t).
Vector prox_l1(const Vector& v, double t);

/// Partition of coordinates into disjoint groups with nonnegative
/// per-group weights. Groups may cover only part of the coordinates;
/// uncovered coordinates are untouched by the group prox.
struct GroupStructure {
    std::vector<std::vector<Index>> groups;
    Vector weights;

    /// Throws if sizes differ, a weight is negative, or groups overlap.
    void validate() const;

    /// Contiguous blocks [b*block, (b+1)*block) for b = 0..count-1.
    static GroupStructure contiguous_blocks(Index count, Index block, const Vector& weights);
    /// Strided groups {i*stride + j : i = 0..rows-1} for j = 0..stride-1,
    /// the columns of a row-major flattened matrix.
    static GroupStructure matrix_columns(Index rows, Index stride, const Vector& weights);
};

/// Blockwise shrinkage v_b * max(0, 1 - t*w_b / ||v_b||), written as an
/// exact 0.0 block whenever ||v_b|| <= t*w_b. Zero-weight groups pass
/// through unchanged.
Vector prox_group_l2(const Vector& v, const GroupStructure& structure, double t);

/// v if ||v|| <= r, else v * r / ||v||. r = 0 projects to the origin.
Vector project_l2_ball(const Vector& v, double r);

/// Conjugate prox computed from the primal prox alone:
/// returns prox_{s*/gamma}(z / gamma) = (z - prox_{gamma s}(z)) / gamma,
/// where prox_{gamma s}(z) = s.prox(z, gamma).
Vector moreau_conjugate_prox(const ProxTerm& s, const Vector& z, double gamma);

/// prox_{nu h*}(v) for nu > 0, realized through the identity
/// prox_{nu h*}(v) = v - nu * prox_{h/nu}(v / nu).
Vector prox_scaled_conjugate(const ProxTerm& h, const Vector& v, double nu);

/// g == 0: value 0, prox is the identity.
class ZeroProx final : public ProxTerm {
public:
    double value(const Vector&) const override { return 0.0; }
    Vector prox(const Vector& v, double t) const override;
};

/// g(x) = weight * ||x||_1.
class L1Prox final : public ProxTerm {
public:
    explicit L1Prox(double weight);

    double value(const Vector& x) const override;
    Vector prox(const Vector& v, double t) const override;

    double weight() const { return weight_; }

private:
    double weight_;
};

/// g(x) = sum_b w_b ||x_b||_2 over the groups of a GroupStructure.
class GroupL2Prox final : public ProxTerm {
public:
    explicit GroupL2Prox(GroupStructure structure);

    double value(const Vector& x) const override;
    Vector prox(const Vector& v, double t) const override;

    const GroupStructure& structure() const { return structure_; }

private:
    GroupStructure structure_;
};

/// Prox term defined by callables; used for ad-hoc fixtures.
class FunctionalProxTerm final : public ProxTerm {
public:
    FunctionalProxTerm(std::function<double(const Vector&)> value,
                       std::function<Vector(const Vector&, double)> prox)
        : value_(std::move(value)), prox_(std::move(prox)) {}

    double value(const Vector& x) const override { return value_(x); }
    Vector prox(const Vector& v, double t) const override { return prox_(v, t); }

private:
    std::function<double(const Vector&)> value_;
    std::function<Vector(const Vector&, double)> prox_;
};

} // namespace proxmm
