#include "cubecover/cvp.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace cubecover {

namespace {

bool lex_less(const Coeffs& a, const Coeffs& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RVec coeffs_to_vec(const RMat& basis, const Coeffs& coeffs) {
  return basis * coeffs_to_rvec(coeffs);
}

// Shared depth-first enumeration over coefficient vectors. `radius` gives
// the per-call pruning distance; when `shrink` is set it follows the
// incumbent instead.
struct Enumerator {
  const RMat& basis;
  const RVec& target;
  RVec rounded_center;       // A^{-1} t
  std::vector<Rational> row_l1;  // l1 norms of the rows of A^{-1}

  Enumerator(const RMat& A, const RVec& t) : basis(A), target(t) {
    if (A.rows() != A.cols() || A.rows() != t.size()) throw DimensionMismatch();
    if (A.rows() > kEnumerationDimLimit) throw DimensionLimitExceeded();
    RMat inv = invert(A);
    rounded_center = inv * t;
    row_l1.resize(static_cast<std::size_t>(A.rows()));
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      Rational s(0);
      for (Eigen::Index j = 0; j < A.cols(); ++j) s += abs_rat(inv(i, j));
      row_l1[static_cast<std::size_t>(i)] = s;
    }
  }

  // Visits every integer coefficient vector x with x_i in
  // [y_i - D r_i, y_i + D r_i] where D = radius(), in lexicographic order.
  // The leaf receives the coefficient vector and the lattice point A x and
  // returns false to stop the whole enumeration.
  template <typename Radius, typename Leaf>
  void run(Radius radius, Leaf leaf) const {
    const Eigen::Index n = basis.rows();
    Coeffs coeffs(static_cast<std::size_t>(n));
    RVec partial = RVec::Zero(n);
    descend(0, coeffs, partial, radius, leaf);
  }

 private:
  template <typename Radius, typename Leaf>
  bool descend(Eigen::Index depth, Coeffs& coeffs, const RVec& partial, Radius radius,
               Leaf leaf) const {
    const Eigen::Index n = basis.rows();
    if (depth == n) return leaf(coeffs, partial);
    Rational span = radius() * row_l1[static_cast<std::size_t>(depth)];
    Integer lo = ceil_int(rounded_center(depth) - span);
    Integer hi = floor_int(rounded_center(depth) + span);
    for (Integer c = lo; c <= hi; ++c) {
      coeffs[static_cast<std::size_t>(depth)] = c;
      RVec next = partial + Rational(c) * basis.col(depth);
      if (!descend(depth + 1, coeffs, next, radius, leaf)) return false;
    }
    return true;
  }
};

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t instance_hash(const LatticeInstance& inst) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Eigen::Index i = 0; i < inst.basis.rows(); ++i) {
    for (Eigen::Index j = 0; j < inst.basis.cols(); ++j) {
      h = fnv1a(inst.basis(i, j).str(), h);
    }
  }
  for (Eigen::Index i = 0; i < inst.target.size(); ++i) h = fnv1a(inst.target(i).str(), h);
  if (inst.dist) h = fnv1a(inst.dist->str(), h);
  return h;
}

}  // namespace

CvpResult exact_cvp(const RMat& basis, const RVec& target) {
  Enumerator en(basis, target);

  // t in the lattice: return it outright so no zero-distance instance
  // reaches the search below.
  bool integral = true;
  for (Eigen::Index i = 0; i < target.size(); ++i) {
    if (!is_integer(en.rounded_center(i))) {
      integral = false;
      break;
    }
  }
  Coeffs best(static_cast<std::size_t>(target.size()));
  for (Eigen::Index i = 0; i < target.size(); ++i) {
    best[static_cast<std::size_t>(i)] = round_half_up(en.rounded_center(i));
  }
  if (integral) return CvpResult{coeffs_to_vec(basis, best), best, Rational(0)};

  Rational best_dist = inf_norm(coeffs_to_vec(basis, best) - target);
  en.run([&] { return best_dist; },
         [&](const Coeffs& coeffs, const RVec& point) {
           Rational d = inf_norm(point - target);
           if (d < best_dist || (d == best_dist && lex_less(coeffs, best))) {
             best_dist = d;
             best = coeffs;
           }
           return true;
         });
  return CvpResult{coeffs_to_vec(basis, best), best, best_dist};
}

std::vector<Coeffs> enumerate_within(const RMat& basis, const RVec& target,
                                     const Rational& radius) {
  Enumerator en(basis, target);
  std::vector<Coeffs> out;
  en.run([&] { return radius; },
         [&](const Coeffs& coeffs, const RVec& point) {
           if (inf_norm(point - target) <= radius) out.push_back(coeffs);
           return true;
         });
  return out;
}

std::optional<GapWitness> find_within(const RMat& basis, const RVec& target,
                                      const Rational& radius) {
  Enumerator en(basis, target);
  std::optional<GapWitness> hit;
  en.run([&] { return radius; },
         [&](const Coeffs& coeffs, const RVec& point) {
           if (inf_norm(point - target) > radius) return true;
           hit = GapWitness{point, coeffs};
           return false;
         });
  return hit;
}

GapOracle exact_as_gap(const Rational& alpha) {
  if (alpha < 1) throw std::invalid_argument("gap oracle: alpha must be >= 1");
  return GapOracle{alpha, [](const LatticeInstance& inst) {
    if (!inst.dist) throw std::invalid_argument("gap query without a distance");
    // A bounded search decides the query without solving the full problem:
    // the first lattice point within D is a valid witness for any alpha.
    if (auto hit = find_within(inst.basis, inst.target, *inst.dist)) {
      return GapResult{std::move(*hit)};
    }
    return GapResult::empty();
  }};
}

GapOracle adversarial_2gap(std::uint64_t seed) {
  return GapOracle{Rational(2), [seed](const LatticeInstance& inst) {
    if (!inst.dist) throw std::invalid_argument("gap query without a distance");
    const Rational& D = *inst.dist;
    std::mt19937_64 rng(seed ^ instance_hash(inst));
    // Found is forced only when some lattice point lies within D/2; in the
    // gap region (D/2, D] both answers are sound, so flip the seeded coin.
    std::optional<GapWitness> start = find_within(inst.basis, inst.target, D / 2);
    if (!start) {
      bool refuse = rng() & 1;
      if (refuse) return GapResult::empty();
      start = find_within(inst.basis, inst.target, D);
      if (!start) return GapResult::empty();
    }
    // Obligated (or chose) to answer Found; wander to some lattice vector
    // within D that need not be the closest.
    Coeffs coeffs = std::move(start->coeffs);
    RVec point = std::move(start->vector);
    for (int step = 0; step < 8; ++step) {
      auto axis = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(inst.dim()));
      Integer delta = (rng() & 1) ? 1 : -1;
      RVec moved = point + Rational(delta) * inst.basis.col(axis);
      if (inf_norm(moved - inst.target) <= D) {
        coeffs[static_cast<std::size_t>(axis)] += delta;
        point = std::move(moved);
      }
    }
    return GapResult{GapWitness{point, coeffs}};
  }};
}

LatticeInstance transform_instance(const RMat& basis, const Parallelepiped& p) {
  if (basis.rows() != p.dim()) throw DimensionMismatch();
  return LatticeInstance{p.map * basis, p.map * p.center, std::nullopt};
}

LatticeInstance box_ip_to_cvp(const RMat& A, const RVec& l, const RVec& u) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || l.size() != n || u.size() != n) throw DimensionMismatch();
  RMat scaled(n, n);
  RVec t(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational w = u(i) - l(i);
    if (w == 0) throw DegenerateSlab();
    if (w < 0) throw std::invalid_argument("slab: l > u");
    scaled.row(i) = A.row(i) / w;
    t(i) = (l(i) + u(i)) / (2 * w);
  }
  return LatticeInstance{std::move(scaled), std::move(t), Rational(1, 2)};
}

}  // namespace cubecover
