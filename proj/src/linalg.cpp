#include "cubecover/linalg.hpp"

namespace cubecover {

namespace {

// Reduces [M | rhs] to the identity in place. rhs holds one or more
// right-hand-side columns and receives the solution.
void eliminate(RMat M, RMat& rhs) {
  const Eigen::Index n = M.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row) {
      if (M(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix();
    if (pivot != col) {
      M.row(pivot).swap(M.row(col));
      rhs.row(pivot).swap(rhs.row(col));
    }
    Rational inv = Rational(1) / M(col, col);
    M.row(col) *= inv;
    rhs.row(col) *= inv;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || M(row, col) == 0) continue;
      Rational f = M(row, col);
      M.row(row) -= f * M.row(col);
      rhs.row(row) -= f * rhs.row(col);
    }
  }
}

}  // namespace

RVec solve(const RMat& M, const RVec& b) {
  if (M.rows() != M.cols() || M.rows() != b.size()) throw DimensionMismatch();
  RMat rhs = b;
  eliminate(M, rhs);
  return rhs.col(0);
}

RMat invert(const RMat& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch();
  RMat rhs = RMat::Identity(M.rows(), M.cols());
  eliminate(M, rhs);
  return rhs;
}

Rational inf_norm(const RVec& v) {
  Rational best(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational a = abs_rat(v(i));
    if (a > best) best = a;
  }
  return best;
}

}  // namespace cubecover
