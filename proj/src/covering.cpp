#include "cubecover/covering.hpp"

namespace cubecover {

namespace {

void check_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InvalidEps();
}

std::int64_t pow_int(std::int64_t b, int e) {
  std::int64_t acc = 1;
  for (int i = 0; i < e; ++i) acc *= b;
  return acc;
}

// Advances an odometer with `levels` positions per digit; returns false on
// wrap-around.
bool advance(std::vector<int>& digits, std::int64_t levels) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (++*it < levels) return true;
    *it = 0;
  }
  return false;
}

bool advance_orthant(std::vector<int>& sigma) {
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) {
    if (*it == 1) {
      *it = -1;
      return true;
    }
    *it = 1;
  }
  return false;
}

}  // namespace

std::int64_t exponent_bound_ratio(const Rational& eps, const Rational& base,
                                  bool strict) {
  check_eps(eps);
  if (base <= 1) throw std::invalid_argument("exponent bound: base must exceed 1");
  std::int64_t a = 0;
  Rational p = eps * base;  // eps * base^{a+1}
  while (strict ? p < 1 : p <= 1) {
    ++a;
    p *= base;
  }
  return a;
}

std::int64_t exponent_bound(const Rational& eps, int base) {
  if (base != 2 && base != 3) throw std::invalid_argument("exponent bound: base must be 2 or 3");
  return exponent_bound_ratio(eps, Rational(base), /*strict=*/base == 3);
}

GridSpec make_grid_spec(int dim, const Rational& eps) {
  check_eps(eps);
  return GridSpec{dim, eps, exponent_bound(eps, 2) + 1};
}

Rational rationalized_ratio(int n) {
  if (n < 2) throw DimensionTooSmall();
  const Integer denom = Integer(1) << 16;
  // Largest k with k/denom <= 1 + 2/(sqrt(n)-1), i.e. n(k-denom)^2 <= (k+denom)^2.
  Integer lo = denom, hi = 6 * denom;
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    Integer d = mid - denom, s = mid + denom;
    if (n * d * d <= s * s) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (lo <= denom) throw std::invalid_argument("rationalized ratio underflows at this dimension");
  return make_rational(lo, denom);
}

// ---------------------------------------------------------------------------
// BoxCover

BoxCover::BoxCover(int dim, Rational eps) {
  check_eps(eps);
  if (dim < 1) throw std::invalid_argument("cover: dim must be >= 1");
  std::int64_t bound = exponent_bound(eps, 3);
  spec_ = CoverSpec{dim, std::move(eps), CoverKind::BoxParallelepiped, bound + 1,
                    pow_int(2, dim) * pow_int(bound + 1, dim)};
  pow3_.assign(static_cast<std::size_t>(bound) + 2, Rational(1));
  for (std::size_t a = 1; a < pow3_.size(); ++a) pow3_[a] = pow3_[a - 1] / 3;
}

AxisBox BoxCover::box(const CoverIndex& idx) const {
  const int n = spec_.dim;
  RVec lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    const int a = idx.exponents[static_cast<std::size_t>(j)];
    Rational lower = 1 - pow3_[static_cast<std::size_t>(a)];
    Rational upper = 1 - pow3_[static_cast<std::size_t>(a) + 1];
    if (idx.orthant[static_cast<std::size_t>(j)] > 0) {
      lo(j) = lower;
      hi(j) = upper;
    } else {
      lo(j) = -upper;
      hi(j) = -lower;
    }
  }
  return AxisBox(std::move(lo), std::move(hi));
}

Parallelepiped BoxCover::body(const CoverIndex& idx) const {
  return pp_from_box(box(idx));
}

bool BoxCover::enumerate(
    const std::function<bool(const CoverIndex&, const Parallelepiped&)>& visit) const {
  const auto n = static_cast<std::size_t>(spec_.dim);
  CoverIndex idx{std::vector<int>(n, 1), std::vector<int>(n, 0)};
  do {
    idx.exponents.assign(n, 0);
    do {
      if (!visit(idx, body(idx))) return false;
    } while (advance(idx.exponents, spec_.per_axis_count));
  } while (advance_orthant(idx.orthant));
  return true;
}

std::vector<std::pair<CoverIndex, Parallelepiped>> BoxCover::materialize() const {
  std::vector<std::pair<CoverIndex, Parallelepiped>> out;
  out.reserve(static_cast<std::size_t>(spec_.total_count));
  enumerate([&](const CoverIndex& idx, const Parallelepiped& p) {
    out.emplace_back(idx, p);
    return true;
  });
  return out;
}

std::optional<CoverIndex> BoxCover::locate(const RVec& x) const {
  if (x.size() != spec_.dim) throw DimensionMismatch();
  const auto n = static_cast<std::size_t>(spec_.dim);
  CoverIndex idx{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    idx.orthant[j] = x(static_cast<Eigen::Index>(j)) >= 0 ? 1 : -1;
    Rational w = 1 - abs_rat(x(static_cast<Eigen::Index>(j)));  // in [3^{-a-1}, 3^{-a}]
    bool found = false;
    for (std::int64_t a = 0; a < spec_.per_axis_count; ++a) {
      if (pow3_[static_cast<std::size_t>(a) + 1] <= w && w <= pow3_[static_cast<std::size_t>(a)]) {
        idx.exponents[j] = static_cast<int>(a);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!pp_contains(body(idx), x, Rational(1))) return std::nullopt;
  return idx;
}

// ---------------------------------------------------------------------------
// EllipsoidCover

EllipsoidCover::EllipsoidCover(int dim, Rational eps) {
  check_eps(eps);
  ratio_ = rationalized_ratio(dim);
  std::int64_t bound = exponent_bound_ratio(eps, ratio_, /*strict=*/true);
  spec_ = CoverSpec{dim, std::move(eps), CoverKind::Ellipsoid, bound + 1,
                    pow_int(2, dim) * pow_int(bound + 1, dim)};
  mid_ = (1 + Rational(1) / ratio_) / 2;
  Rational gap = 1 - mid_;
  sq_axis_unit_ = dim * gap * gap;
  powr_.assign(static_cast<std::size_t>(bound) + 2, Rational(1));
  for (std::size_t a = 1; a < powr_.size(); ++a) powr_[a] = powr_[a - 1] / ratio_;
}

AxisEllipsoid EllipsoidCover::body(const CoverIndex& idx) const {
  const int n = spec_.dim;
  RVec c(n), s(n);
  for (int j = 0; j < n; ++j) {
    const Rational& v = powr_[static_cast<std::size_t>(idx.exponents[static_cast<std::size_t>(j)])];
    // Positive-orthant geometry lives in H' = [0,2]^n around m*v; the map
    // y -> sigma (1 - y) transports it into H.
    c(j) = idx.orthant[static_cast<std::size_t>(j)] * (1 - mid_ * v);
    s(j) = sq_axis_unit_ * v * v;
  }
  return AxisEllipsoid{std::move(c), std::move(s)};
}

bool EllipsoidCover::enumerate(
    const std::function<bool(const CoverIndex&, const AxisEllipsoid&)>& visit) const {
  const auto n = static_cast<std::size_t>(spec_.dim);
  CoverIndex idx{std::vector<int>(n, 1), std::vector<int>(n, 0)};
  do {
    idx.exponents.assign(n, 0);
    do {
      if (!visit(idx, body(idx))) return false;
    } while (advance(idx.exponents, spec_.per_axis_count));
  } while (advance_orthant(idx.orthant));
  return true;
}

std::vector<std::pair<CoverIndex, AxisEllipsoid>> EllipsoidCover::materialize() const {
  std::vector<std::pair<CoverIndex, AxisEllipsoid>> out;
  out.reserve(static_cast<std::size_t>(spec_.total_count));
  enumerate([&](const CoverIndex& idx, const AxisEllipsoid& e) {
    out.emplace_back(idx, e);
    return true;
  });
  return out;
}

std::optional<CoverIndex> EllipsoidCover::locate(const RVec& x) const {
  if (x.size() != spec_.dim) throw DimensionMismatch();
  const auto n = static_cast<std::size_t>(spec_.dim);
  CoverIndex idx{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    idx.orthant[j] = x(static_cast<Eigen::Index>(j)) >= 0 ? 1 : -1;
    Rational y = 1 - abs_rat(x(static_cast<Eigen::Index>(j)));  // in [r^{-a-1}, r^{-a}]
    bool found = false;
    for (std::int64_t a = 0; a < spec_.per_axis_count; ++a) {
      if (powr_[static_cast<std::size_t>(a) + 1] <= y && y <= powr_[static_cast<std::size_t>(a)]) {
        idx.exponents[j] = static_cast<int>(a);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!ellipsoid_contains(body(idx), x)) return std::nullopt;
  return idx;
}

// ---------------------------------------------------------------------------
// Queries and grid counting

std::optional<CoverIndex> cover_point_query(
    const std::vector<std::pair<CoverIndex, Parallelepiped>>& cover, const RVec& x) {
  for (const auto& [idx, p] : cover) {
    if (pp_contains(p, x, Rational(1))) return idx;
  }
  return std::nullopt;
}

std::optional<CoverIndex> cover_point_query(
    const std::vector<std::pair<CoverIndex, AxisEllipsoid>>& cover, const RVec& x) {
  for (const auto& [idx, e] : cover) {
    if (ellipsoid_contains(e, x)) return idx;
  }
  return std::nullopt;
}

std::vector<RVec> grid_points(const GridSpec& spec) {
  check_eps(spec.eps);
  std::vector<Rational> pow2(static_cast<std::size_t>(spec.levels), Rational(1));
  for (std::size_t a = 1; a < pow2.size(); ++a) pow2[a] = pow2[a - 1] / 2;
  std::vector<RVec> out;
  std::vector<int> alpha(static_cast<std::size_t>(spec.dim), 0);
  do {
    RVec v(spec.dim);
    for (int j = 0; j < spec.dim; ++j) v(j) = pow2[static_cast<std::size_t>(alpha[static_cast<std::size_t>(j)])];
    out.push_back(std::move(v));
  } while (advance(alpha, spec.levels));
  return out;
}

std::int64_t count_grid_in_body(const Parallelepiped& body, const GridSpec& spec) {
  if (body.dim() != spec.dim) throw DimensionMismatch();
  RMat inv = invert(body.map);
  RVec sigma(spec.dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.dim); ++mask) {
    for (int j = 0; j < spec.dim; ++j) sigma(j) = (mask >> j) & 1 ? Rational(1) : Rational(-1);
    RVec vertex = body.center + 2 * (inv * sigma);
    for (int j = 0; j < spec.dim; ++j) {
      if (vertex(j) < 0) {
        throw PreconditionViolated("2-scaled parallelepiped leaves the positive orthant");
      }
    }
  }
  std::int64_t count = 0;
  for (const RVec& v : grid_points(spec)) {
    if (pp_contains(body, v, Rational(1))) ++count;
  }
  return count;
}

std::int64_t count_grid_in_body(const AxisEllipsoid& body, const GridSpec& spec) {
  if (body.dim() != spec.dim) throw DimensionMismatch();
  for (Eigen::Index j = 0; j < body.dim(); ++j) {
    // The ellipsoid stays in the closed orthant iff c_j >= 0 and c_j^2 >= s_j.
    if (body.center(j) < 0 || body.center(j) * body.center(j) < body.sq_semi_axes(j)) {
      throw PreconditionViolated("ellipsoid leaves the positive orthant");
    }
  }
  std::int64_t count = 0;
  for (const RVec& v : grid_points(spec)) {
    if (ellipsoid_contains(body, v)) ++count;
  }
  return count;
}

}  // namespace cubecover
