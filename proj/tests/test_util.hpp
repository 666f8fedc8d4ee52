#ifndef CUBECOVER_TEST_UTIL_HPP
#define CUBECOVER_TEST_UTIL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cubecover/cvp.hpp"
#include "cubecover/harness.hpp"

namespace cctest {

using namespace cubecover;

inline Rational rat(const std::string& s) { return parse_rational(s); }

inline RVec vec(std::initializer_list<std::string> entries) {
  RVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = parse_rational(e);
  return v;
}

inline RMat mat(std::initializer_list<std::initializer_list<std::string>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  RMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& e : row) m(i, j++) = parse_rational(e);
    ++i;
  }
  return m;
}

/// Independent oracle: minimum of ||A x - t||_inf over the full integer
/// coefficient sweep [-radius, radius]^n, with lexicographic tie-break.
/// Deliberately shares no code with the enumeration solver.
struct SweepResult {
  Rational dist;
  Coeffs coeffs;
};

inline SweepResult brute_force_cvp(const RMat& basis, const RVec& target, long radius) {
  const Eigen::Index n = basis.cols();
  SweepResult best;
  bool first = true;
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  // Recursive descent keeping the partial sum, ascending per level so the
  // first minimizer seen is the lexicographically smallest.
  auto descend = [&](auto&& self, Eigen::Index depth, RVec partial) -> void {
    if (depth == n) {
      Rational d = inf_norm(partial - target);
      if (first || d < best.dist) {
        first = false;
        best.dist = d;
        best.coeffs.assign(x.begin(), x.end());
      }
      return;
    }
    RVec at = partial - Rational(radius) * basis.col(depth);
    for (long c = -radius; c <= radius; ++c) {
      x[static_cast<std::size_t>(depth)] = c;
      self(self, depth + 1, at);
      at += basis.col(depth);
    }
  };
  descend(descend, 0, RVec::Zero(basis.rows()));
  return best;
}

/// Certified flat sweep: any minimizer satisfies x = A^{-1}(t + e) with
/// ||e||_inf bounded by the distance of a rounded starting point, so the
/// coefficient box below provably contains every optimum. The box is then
/// enumerated exhaustively, ascending, without pruning.
inline SweepResult certified_sweep_cvp(const RMat& basis, const RVec& target) {
  const Eigen::Index n = basis.cols();
  RMat inv = invert(basis);
  RVec y = inv * target;

  std::vector<long> center(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    center[static_cast<std::size_t>(j)] = static_cast<long>(round_half_up(y(j)));
  }
  // Incumbent: best point with coefficients in center + {-1,0,1}^n.
  Rational d0;
  bool first = true;
  std::vector<long> off(static_cast<std::size_t>(n), -1);
  for (;;) {
    RVec x(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      x(j) = center[static_cast<std::size_t>(j)] + off[static_cast<std::size_t>(j)];
    }
    Rational d = inf_norm(basis * x - target);
    if (first || d < d0) {
      first = false;
      d0 = d;
    }
    Eigen::Index k = n - 1;
    while (k >= 0 && off[static_cast<std::size_t>(k)] == 1) {
      off[static_cast<std::size_t>(k)] = -1;
      --k;
    }
    if (k < 0) break;
    ++off[static_cast<std::size_t>(k)];
  }

  std::vector<long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational radius = 0;
    for (Eigen::Index k = 0; k < n; ++k) radius += abs_rat(inv(j, k));
    radius *= d0;
    lo[static_cast<std::size_t>(j)] = static_cast<long>(ceil_int(y(j) - radius));
    hi[static_cast<std::size_t>(j)] = static_cast<long>(floor_int(y(j) + radius));
  }

  SweepResult best;
  first = true;
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  auto descend = [&](auto&& self, Eigen::Index depth, RVec partial) -> void {
    if (depth == n) {
      Rational d = inf_norm(partial - target);
      if (first || d < best.dist) {
        first = false;
        best.dist = d;
        best.coeffs.assign(x.begin(), x.end());
      }
      return;
    }
    const long a = lo[static_cast<std::size_t>(depth)];
    const long b = hi[static_cast<std::size_t>(depth)];
    RVec at = partial + Rational(a) * basis.col(depth);
    for (long c = a; c <= b; ++c) {
      x[static_cast<std::size_t>(depth)] = c;
      self(self, depth + 1, at);
      at += basis.col(depth);
    }
  };
  descend(descend, 0, RVec::Zero(basis.rows()));
  return best;
}

}  // namespace cctest

#endif
