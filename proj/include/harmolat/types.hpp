#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Dense>

namespace harmolat {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using Vertex = std::int32_t;
using Distance = std::int32_t;

/// Distance between vertices in different connected components.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Which diagonal block of a covariance matrix a correlator refers to.
enum class Block { xx, pp };

inline const char* block_name(Block b) { return b == Block::xx ? "xx" : "pp"; }

}  // namespace harmolat
