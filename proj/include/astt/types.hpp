#pragma once

#include <Eigen/Core>

namespace astt {

// Training and gradient checks run in double precision; checkpoints store f32.
using Scalar = double;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

}  // namespace astt
