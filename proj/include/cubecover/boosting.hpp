#ifndef CUBECOVER_BOOSTING_HPP
#define CUBECOVER_BOOSTING_HPP

#include <memory>

#include "cubecover/covering.hpp"
#include "cubecover/cvp.hpp"

namespace cubecover {

struct OracleUnsound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration of the 2-gap -> (1+eps)-gap reduction. `delta` is the
/// covering shrink eps/(1+eps), distinct from the binary search's own
/// delta = min{eps/5, 1/2}; the two are easy to conflate.
struct BoostConfig {
  Rational eps;
  Rational delta;  // eps/(1+eps), so 1 - delta = 1/(1+eps)
  GapOracle oracle;  // 2-gap
  std::shared_ptr<const BoxCover> cover;  // covering of (dim, delta), reusable

  static BoostConfig make(const Rational& eps, GapOracle oracle, int dim);
};

struct BoostedGapOutcome {
  GapResult result;
  std::int64_t oracle_calls = 0;
};

/// Solves the (1+eps)-gap problem with one 2-gap oracle call per covering
/// body: Found returns a lattice vector within dist of the target, Empty
/// certifies d(t, Lambda) > dist/(1+eps). Every witness is rechecked
/// exactly; a failing recheck throws OracleUnsound.
BoostedGapOutcome boosted_gap(const LatticeInstance& inst, const BoostConfig& cfg);

/// Smallest integer k with (1+delta)^k >= value, by exact repeated
/// multiplication; negative k supported.
std::int64_t ceil_log1p(const Rational& value, const Rational& delta);

/// Largest integer k with (1+delta)^k <= value.
std::int64_t floor_log1p(const Rational& value, const Rational& delta);

struct SearchStep {
  std::int64_t lower = 0;  // L after the step
  std::int64_t upper = 0;  // U after the step
  bool found = false;
};

struct ApproxResult {
  RVec vector;
  Coeffs coeffs;
  Rational achieved_dist;
  std::int64_t oracle_calls = 0;  // inner 2-gap oracle calls, total
  std::int64_t gap_calls = 0;     // boosted-gap invocations, total
  std::int64_t search_calls = 0;  // gap calls in the binary search + final
  std::int64_t m0 = 0;            // U - L right after initialization
  std::vector<std::int64_t> bracket_widths;  // M_j per binary-search step
  std::vector<SearchStep> trace;             // (L, U) after init and each step
};

/// (1+eps)-approximation by binary search over the boosted gap oracle.
/// The initial bracket comes from galloping probes at powers of two
/// rather than an encoding-length bound.
ApproxResult approx_cvp(const RMat& basis, const RVec& target, const Rational& eps,
                        const GapOracle& two_gap);

}  // namespace cubecover

#endif
