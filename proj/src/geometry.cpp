#include "cubecover/geometry.hpp"

namespace cubecover {

AxisBox::AxisBox(RVec lo, RVec hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw DimensionMismatch();
  for (Eigen::Index j = 0; j < lower.size(); ++j) {
    if (lower(j) > upper(j)) throw std::invalid_argument("box: lower > upper");
  }
}

bool box_contains(const AxisBox& b, const RVec& x) {
  if (x.size() != b.dim()) throw DimensionMismatch();
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < b.lower(j) || x(j) > b.upper(j)) return false;
  }
  return true;
}

bool pp_contains(const Parallelepiped& p, const RVec& x, const Rational& scale) {
  if (x.size() != p.dim()) throw DimensionMismatch();
  return inf_norm(p.map * (x - p.center)) <= scale;
}

Parallelepiped pp_from_box(const AxisBox& b) {
  const Eigen::Index n = b.dim();
  RMat map = RMat::Zero(n, n);
  RVec center(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational h = (b.upper(j) - b.lower(j)) / 2;
    if (h == 0) throw DegenerateBox();
    map(j, j) = Rational(1) / h;
    center(j) = (b.lower(j) + b.upper(j)) / 2;
  }
  return Parallelepiped{std::move(map), std::move(center)};
}

bool pp_scaled_inside_box(const Parallelepiped& p, const AxisBox& outer,
                          const Rational& scale) {
  const Eigen::Index n = p.dim();
  RMat inv = invert(p.map);
  RVec sigma(n);
  // Odometer over the 2^n sign vectors.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sigma(j) = (mask >> j) & 1 ? Rational(1) : Rational(-1);
    }
    RVec vertex = p.center + scale * (inv * sigma);
    if (!box_contains(outer, vertex)) return false;
  }
  return true;
}

bool ellipsoid_contains(const AxisEllipsoid& e, const RVec& x) {
  if (x.size() != e.dim()) throw DimensionMismatch();
  Rational sum(0);
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Rational d = x(j) - e.center(j);
    sum += d * d / e.sq_semi_axes(j);
  }
  return sum <= 1;
}

bool ellipsoid_inside_box(const AxisEllipsoid& e, const AxisBox& outer) {
  if (e.dim() != outer.dim()) throw DimensionMismatch();
  for (Eigen::Index j = 0; j < e.dim(); ++j) {
    const Rational& c = e.center(j);
    const Rational& s = e.sq_semi_axes(j);
    if (c < outer.lower(j) || c > outer.upper(j)) return false;
    Rational left = c - outer.lower(j);
    Rational right = outer.upper(j) - c;
    if (left * left < s || right * right < s) return false;
  }
  return true;
}

}  // namespace cubecover
