#ifndef CUBECOVER_COVERING_HPP
#define CUBECOVER_COVERING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cubecover/geometry.hpp"

namespace cubecover {

struct InvalidEps : std::runtime_error {
  InvalidEps() : std::runtime_error("eps must lie in (0,1)") {}
};

struct DimensionTooSmall : std::runtime_error {
  DimensionTooSmall() : std::runtime_error("ellipsoid covering needs dim >= 2") {}
};

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Which orthant a body lives in and which per-axis shell it occupies.
struct CoverIndex {
  std::vector<int> orthant;    // sigma_j in {-1,+1}
  std::vector<int> exponents;  // alpha_j >= 0

  bool operator==(const CoverIndex&) const = default;
};

enum class CoverKind { BoxParallelepiped, Ellipsoid };

struct CoverSpec {
  int dim = 0;
  Rational eps;
  CoverKind kind = CoverKind::BoxParallelepiped;
  std::int64_t per_axis_count = 0;  // A + 1
  std::int64_t total_count = 0;     // 2^dim * per_axis_count^dim
};

/// The grid G_eps of points with coordinates 2^{-alpha} >= eps.
struct GridSpec {
  int dim = 0;
  Rational eps;
  std::int64_t levels = 0;  // 1 + floor(log2(1/eps))
};

GridSpec make_grid_spec(int dim, const Rational& eps);

/// Largest A >= 0 with base^{-A} > eps (base 3, strict — the U-box range)
/// or base^{-A} >= eps (base 2, non-strict — the grid range). Computed by
/// exact power comparisons, never by floating logarithms.
std::int64_t exponent_bound(const Rational& eps, int base);

/// Same for an arbitrary rational base > 1, with an explicit strictness.
std::int64_t exponent_bound_ratio(const Rational& eps, const Rational& base,
                                  bool strict);

/// Largest rational with denominator 2^16 that is <= 1 + 2/(sqrt(n)-1)
/// and > 1. Shrinking the ratio only shrinks the boxes Q(alpha), so the
/// circumscribed ellipsoids stay inside the outer cube.
Rational rationalized_ratio(int n);

/// Orthant-wise parallelepiped covering of H_eps = [-1+eps, 1-eps]^n by
/// reflected copies of U(alpha) = prod [1-3^{-a_j}, 1-3^{-a_j-1}]. Every
/// body, scaled by 2 about its center, stays inside H = [-1,1]^n.
class BoxCover {
 public:
  BoxCover(int dim, Rational eps);

  const CoverSpec& spec() const { return spec_; }

  AxisBox box(const CoverIndex& idx) const;
  Parallelepiped body(const CoverIndex& idx) const;

  /// Visits bodies lazily in lexicographic (sigma, alpha) order; stops
  /// early when the visitor returns false. Returns true iff it ran to
  /// completion.
  bool enumerate(
      const std::function<bool(const CoverIndex&, const Parallelepiped&)>& visit) const;

  std::vector<std::pair<CoverIndex, Parallelepiped>> materialize() const;

  /// Index of a body containing x, found arithmetically and verified by
  /// exact membership; absent iff x is not covered.
  std::optional<CoverIndex> locate(const RVec& x) const;

 private:
  CoverSpec spec_;
  std::vector<Rational> pow3_;  // 3^{-a}, a = 0..A+1
};

/// Orthant-wise axis-parallel ellipsoid covering of H_eps: per orthant,
/// the circumscribed ellipsoids of the boxes Q(alpha) under the
/// rationalized ratio, transported into H = [-1,1]^n.
class EllipsoidCover {
 public:
  EllipsoidCover(int dim, Rational eps);

  const CoverSpec& spec() const { return spec_; }
  const Rational& ratio() const { return ratio_; }

  AxisEllipsoid body(const CoverIndex& idx) const;

  bool enumerate(
      const std::function<bool(const CoverIndex&, const AxisEllipsoid&)>& visit) const;

  std::vector<std::pair<CoverIndex, AxisEllipsoid>> materialize() const;

  std::optional<CoverIndex> locate(const RVec& x) const;

 private:
  CoverSpec spec_;
  Rational ratio_;         // r-hat
  Rational mid_;           // m = (1 + 1/r-hat)/2
  Rational sq_axis_unit_;  // n * (1-m)^2
  std::vector<Rational> powr_;  // r-hat^{-a}
};

/// First index in stream order whose body contains x, or absent.
std::optional<CoverIndex> cover_point_query(
    const std::vector<std::pair<CoverIndex, Parallelepiped>>& cover, const RVec& x);
std::optional<CoverIndex> cover_point_query(
    const std::vector<std::pair<CoverIndex, AxisEllipsoid>>& cover, const RVec& x);

/// All levels^dim points of G_eps, lexicographic in the exponent vector.
std::vector<RVec> grid_points(const GridSpec& spec);

/// Exact count of grid points inside the body. The parallelepiped overload
/// requires that the body, scaled by 2 about its center, stays in the closed
/// positive orthant; the ellipsoid overload requires the ellipsoid itself to
/// stay there. Throws PreconditionViolated otherwise.
std::int64_t count_grid_in_body(const Parallelepiped& body, const GridSpec& spec);
std::int64_t count_grid_in_body(const AxisEllipsoid& body, const GridSpec& spec);

}  // namespace cubecover

#endif
