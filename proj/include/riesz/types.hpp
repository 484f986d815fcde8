#ifndef RIESZ_TYPES_HPP
#define RIESZ_TYPES_HPP

#include <cstdint>

#include <Eigen/Core>

namespace riesz {

/// Integer frequency vectors. Entries are small (‖α‖₁ ≤ 2²⁰) but products
/// of two contents are formed, so 64-bit storage is used throughout.
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

using Eigen::MatrixXd;
using Eigen::VectorXd;

}  // namespace riesz

#endif  // RIESZ_TYPES_HPP
