#ifndef CUBECOVER_GEOMETRY_HPP
#define CUBECOVER_GEOMETRY_HPP

#include <stdexcept>

#include "cubecover/linalg.hpp"

namespace cubecover {

struct DegenerateBox : std::runtime_error {
  DegenerateBox() : std::runtime_error("box has a zero-width side") {}
};

/// Axis-aligned box [lower_1, upper_1] x ... x [lower_n, upper_n].
struct AxisBox {
  RVec lower;
  RVec upper;

  AxisBox(RVec lo, RVec hi);

  Eigen::Index dim() const { return lower.size(); }
};

/// {x : ||E(x - d)||_inf <= 1} for nonsingular E. The scaled body P^s is
/// the same set with threshold 2.
struct Parallelepiped {
  RMat map;     // E
  RVec center;  // d

  Eigen::Index dim() const { return center.size(); }
};

/// Axis-parallel ellipsoid sum_j (x_j - c_j)^2 / s_j <= 1. Squared
/// semi-axes are stored so every membership test is a rational comparison.
struct AxisEllipsoid {
  RVec center;        // c
  RVec sq_semi_axes;  // s_j = a_j^2 > 0

  Eigen::Index dim() const { return center.size(); }
};

/// Coordinatewise lower <= x <= upper, boundary inclusive.
bool box_contains(const AxisBox& b, const RVec& x);

/// ||E(x - d)||_inf <= scale; scale = 1 tests P, scale = 2 tests P^s.
bool pp_contains(const Parallelepiped& p, const RVec& x, const Rational& scale);

/// Canonical parallelepiped of a box: E = diag(1/h_j) with half-widths
/// h_j, d = midpoint. Throws DegenerateBox on any zero width.
Parallelepiped pp_from_box(const AxisBox& b);

/// Whether p dilated by `scale` about its center lies inside `outer`,
/// decided exactly by testing all 2^n vertices d +- scale * E^{-1} sigma.
bool pp_scaled_inside_box(const Parallelepiped& p, const AxisBox& outer,
                          const Rational& scale);

bool ellipsoid_contains(const AxisEllipsoid& e, const RVec& x);

/// An axis ellipsoid lies in a box iff its center does and each squared
/// semi-axis fits on both sides: (c_j - lower_j)^2 >= s_j, (upper_j - c_j)^2 >= s_j.
bool ellipsoid_inside_box(const AxisEllipsoid& e, const AxisBox& outer);

}  // namespace cubecover

#endif
