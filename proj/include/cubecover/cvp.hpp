#ifndef CUBECOVER_CVP_HPP
#define CUBECOVER_CVP_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cubecover/geometry.hpp"
#include "cubecover/linalg.hpp"

namespace cubecover {

struct DimensionLimitExceeded : std::runtime_error {
  DimensionLimitExceeded() : std::runtime_error("dimension exceeds the enumeration limit") {}
};

struct DegenerateSlab : std::runtime_error {
  DegenerateSlab() : std::runtime_error("slab has a zero-width row") {}
};

/// Full-rank lattice Lambda(basis) (columns generate), target vector, and
/// the distance parameter of a gap instance when posed as one.
struct LatticeInstance {
  RMat basis;
  RVec target;
  std::optional<Rational> dist;

  Eigen::Index dim() const { return target.size(); }
};

using Coeffs = std::vector<Integer>;

/// Witness of an alpha-gap query: a lattice vector within the claimed
/// distance, with its integer coefficients.
struct GapWitness {
  RVec vector;
  Coeffs coeffs;
};

/// Either a witness or a certified-empty assertion.
struct GapResult {
  std::optional<GapWitness> witness;

  bool found() const { return witness.has_value(); }
  static GapResult empty() { return {}; }
};

struct GapOracle {
  Rational alpha;
  std::function<GapResult(const LatticeInstance&)> query;
};

struct CvpResult {
  RVec vector;
  Coeffs coeffs;
  Rational dist;
};

constexpr int kEnumerationDimLimit = 8;

inline RVec coeffs_to_rvec(const Coeffs& coeffs) {
  RVec x(static_cast<Eigen::Index>(coeffs.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Rational(coeffs[static_cast<std::size_t>(i)]);
  return x;
}

/// Exact CVP in the max norm by depth-first coefficient enumeration with
/// a rounded (Babai-style) start. Among minimizers, returns the one with
/// the lexicographically smallest coefficient vector.
CvpResult exact_cvp(const RMat& basis, const RVec& target);

/// All coefficient vectors x with ||basis*x - target||_inf <= radius, in
/// lexicographic order.
std::vector<Coeffs> enumerate_within(const RMat& basis, const RVec& target,
                                     const Rational& radius);

/// First (lexicographic) lattice point within `radius` of the target, or
/// absent. The search is pruned by `radius` itself, so gap queries stay
/// cheap even when the full closest-vector search would not.
std::optional<GapWitness> find_within(const RMat& basis, const RVec& target,
                                      const Rational& radius);

/// The exact solver posed as an alpha-gap oracle; sound for every alpha >= 1.
GapOracle exact_as_gap(const Rational& alpha);

/// A sound but maximally unhelpful 2-gap oracle: answers Empty whenever it
/// legally can (seeded coin in the gap region), and its witnesses are any
/// lattice vector within D, not the closest.
GapOracle adversarial_2gap(std::uint64_t seed);

/// B = E*A, t' = E*d per the parallelepiped test: x in Lambda(A) lies in
/// the (scale-s) body iff E*x is within s of t' in Lambda(B).
LatticeInstance transform_instance(const RMat& basis, const Parallelepiped& p);

/// Reduces the integer feasibility of {x : l <= A x <= u} to a CVP gap
/// instance with dist = 1/2 by rescaling each row to unit width.
LatticeInstance box_ip_to_cvp(const RMat& A, const RVec& l, const RVec& u);

}  // namespace cubecover

#endif
