#include "proxmm/prox.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace proxmm {

namespace {

void require_positive_t(double t, const char* who) {
    if (!(t > 0.0)) throw std::invalid_argument(std::string(who) + ": t must be positive");
}

} // namespace

Vector prox_l1(const Vector& v, double t) {
    require_positive_t(t, "prox_l1");
    Vector out(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]) - t;
        out[i] = mag > 0.0 ? (v[i] > 0.0 ? mag : -mag) : 0.0;
    }
    return out;
}

void GroupStructure::validate() const {
    if (static_cast<Index>(groups.size()) != weights.size())
        throw std::invalid_argument("GroupStructure: one weight per group required");
    if ((weights.array() < 0.0).any())
        throw std::invalid_argument("GroupStructure: weights must be nonnegative");
    std::unordered_set<Index> seen;
    for (const auto& g : groups)
        for (Index idx : g) {
            if (idx < 0) throw std::invalid_argument("GroupStructure: negative index");
            if (!seen.insert(idx).second)
                throw std::invalid_argument("GroupStructure: groups must be disjoint");
        }
}

GroupStructure GroupStructure::contiguous_blocks(Index count, Index block, const Vector& weights) {
    GroupStructure s;
    s.groups.reserve(static_cast<std::size_t>(count));
    for (Index b = 0; b < count; ++b) {
        std::vector<Index> g(static_cast<std::size_t>(block));
        for (Index r = 0; r < block; ++r) g[static_cast<std::size_t>(r)] = b * block + r;
        s.groups.push_back(std::move(g));
    }
    s.weights = weights;
    s.validate();
    return s;
}

GroupStructure GroupStructure::matrix_columns(Index rows, Index stride, const Vector& weights) {
    GroupStructure s;
    s.groups.reserve(static_cast<std::size_t>(stride));
    for (Index j = 0; j < stride; ++j) {
        std::vector<Index> g(static_cast<std::size_t>(rows));
        for (Index i = 0; i < rows; ++i) g[static_cast<std::size_t>(i)] = i * stride + j;
        s.groups.push_back(std::move(g));
    }
    s.weights = weights;
    s.validate();
    return s;
}

Vector prox_group_l2(const Vector& v, const GroupStructure& structure, double t) {
    require_positive_t(t, "prox_group_l2");
    Vector out = v;
    for (std::size_t b = 0; b < structure.groups.size(); ++b) {
        const double w = structure.weights[static_cast<Index>(b)];
        if (w == 0.0) continue; // zero-weight group passes through
        const auto& g = structure.groups[b];
        double sq = 0.0;
        for (Index idx : g) sq += v[idx] * v[idx];
        const double norm = std::sqrt(sq);
        if (norm <= t * w) {
            for (Index idx : g) out[idx] = 0.0;
        } else {
            const double shrink = 1.0 - t * w / norm;
            for (Index idx : g) out[idx] = v[idx] * shrink;
        }
    }
    return out;
}

Vector project_l2_ball(const Vector& v, double r) {
    if (r < 0.0) throw std::invalid_argument("project_l2_ball: radius must be nonnegative");
    const double norm = v.norm();
    if (norm <= r) return v;
    if (r == 0.0) return Vector::Zero(v.size());
    return v * (r / norm);
}

Vector moreau_conjugate_prox(const ProxTerm& s, const Vector& z, double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("moreau_conjugate_prox: gamma must be positive");
    return (z - s.prox(z, gamma)) / gamma;
}

Vector prox_scaled_conjugate(const ProxTerm& h, const Vector& v, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("prox_scaled_conjugate: nu must be positive");
    return moreau_conjugate_prox(h, v / nu, 1.0 / nu);
}

Vector ZeroProx::prox(const Vector& v, double t) const {
    require_positive_t(t, "ZeroProx::prox");
    return v;
}

L1Prox::L1Prox(double weight) : weight_(weight) {
    if (weight_ < 0.0) throw std::invalid_argument("L1Prox: weight must be nonnegative");
}

double L1Prox::value(const Vector& x) const { return weight_ * x.lpNorm<1>(); }

Vector L1Prox::prox(const Vector& v, double t) const {
    require_positive_t(t, "L1Prox::prox");
    if (weight_ == 0.0) return v;
    return prox_l1(v, t * weight_);
}

GroupL2Prox::GroupL2Prox(GroupStructure structure) : structure_(std::move(structure)) {
    structure_.validate();
}

double GroupL2Prox::value(const Vector& x) const {
    double acc = 0.0;
    for (std::size_t b = 0; b < structure_.groups.size(); ++b) {
        double sq = 0.0;
        for (Index idx : structure_.groups[b]) sq += x[idx] * x[idx];
        acc += structure_.weights[static_cast<Index>(b)] * std::sqrt(sq);
    }
    return acc;
}

Vector GroupL2Prox::prox(const Vector& v, double t) const {
    return prox_group_l2(v, structure_, t);
}

} // namespace proxmm
