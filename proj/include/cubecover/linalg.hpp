#ifndef CUBECOVER_LINALG_HPP
#define CUBECOVER_LINALG_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>

#include "cubecover/rational.hpp"

namespace cubecover {

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch() : std::runtime_error("dimension mismatch") {}
};

/// Exact solution x of M x = b by Gaussian elimination (first nonzero
/// pivot, rows in order). Throws SingularMatrix if no pivot is found.
RVec solve(const RMat& M, const RVec& b);

/// Exact inverse; M * invert(M) is the identity, entrywise.
RMat invert(const RMat& M);

/// max_j |v_j|, exact.
Rational inf_norm(const RVec& v);

}  // namespace cubecover

#endif
