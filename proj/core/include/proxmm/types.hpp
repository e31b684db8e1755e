#pragma once

#include <Eigen/Core>

namespace proxmm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

} // namespace proxmm
