#include "cubecover/boosting.hpp"

#include <utility>

namespace cubecover {

BoostConfig BoostConfig::make(const Rational& eps, GapOracle oracle, int dim) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("boost: eps must lie in (0,1]");
  Rational delta = eps / (1 + eps);
  auto cover = std::make_shared<BoxCover>(dim, delta);
  return BoostConfig{eps, std::move(delta), std::move(oracle), std::move(cover)};
}

BoostedGapOutcome boosted_gap(const LatticeInstance& inst, const BoostConfig& cfg) {
  if (!inst.dist || *inst.dist <= 0) throw std::invalid_argument("boosted gap: dist must be positive");
  const Rational& D = *inst.dist;
  // Scale to D = 1; the covering of H_delta then covers T = t' + H_delta.
  RMat scaled_basis = inst.basis / D;
  RVec scaled_target = inst.target / D;

  BoostedGapOutcome out;
  cfg.cover->enumerate([&](const CoverIndex&, const Parallelepiped& p) {
    Parallelepiped shifted{p.map, p.center + scaled_target};
    LatticeInstance query = transform_instance(scaled_basis, shifted);
    query.dist = Rational(2);
    GapResult res = cfg.oracle.query(query);
    ++out.oracle_calls;
    if (!res.found()) return true;

    const GapWitness& w = *res.witness;
    RVec rebuilt = coeffs_to_rvec(w.coeffs);
    if (inf_norm(query.basis * rebuilt - w.vector) != 0 ||
        inf_norm(w.vector - query.target) > 2) {
      throw OracleUnsound("2-gap witness fails the exact recheck");
    }
    RVec point = inst.basis * rebuilt;
    if (inf_norm(point - inst.target) > D) {
      throw OracleUnsound("boosted witness leaves the target cube");
    }
    out.result = GapResult{GapWitness{std::move(point), w.coeffs}};
    return false;
  });
  return out;
}

std::int64_t ceil_log1p(const Rational& value, const Rational& delta) {
  if (value <= 0 || delta <= 0) throw std::invalid_argument("ceil_log1p: value and delta must be positive");
  const Rational base = 1 + delta;
  std::int64_t k = 0;
  Rational p(1);
  while (p < value) {
    p *= base;
    ++k;
  }
  if (k > 0) return k;
  while (p / base >= value) {
    p /= base;
    --k;
  }
  return k;
}

std::int64_t floor_log1p(const Rational& value, const Rational& delta) {
  return -ceil_log1p(Rational(1) / value, delta);
}

namespace {

struct GapDriver {
  const RMat& basis;
  const RVec& target;
  BoostConfig cfg;
  ApproxResult& stats;

  BoostedGapOutcome query(const Rational& dist) {
    LatticeInstance inst{basis, target, dist};
    BoostedGapOutcome out = boosted_gap(inst, cfg);
    stats.oracle_calls += out.oracle_calls;
    ++stats.gap_calls;
    return out;
  }
};

std::int64_t ceil_log2(std::int64_t m) {
  std::int64_t k = 0;
  std::int64_t p = 1;
  while (p < m) {
    p *= 2;
    ++k;
  }
  return k;
}

}  // namespace

ApproxResult approx_cvp(const RMat& basis, const RVec& target, const Rational& eps,
                        const GapOracle& two_gap) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("approx: eps must lie in (0,1)");
  const int n = static_cast<int>(target.size());

  ApproxResult res;

  // Target already in the lattice.
  RVec coeff_vec = solve(basis, target);
  bool integral = true;
  for (Eigen::Index i = 0; i < coeff_vec.size(); ++i) {
    if (!is_integer(coeff_vec(i))) {
      integral = false;
      break;
    }
  }
  if (integral) {
    res.vector = target;
    res.coeffs.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < coeff_vec.size(); ++i) {
      res.coeffs[static_cast<std::size_t>(i)] = numerator(coeff_vec(i));
    }
    res.achieved_dist = 0;
    return res;
  }

  const Rational fifth = eps / 5;
  const Rational delta = fifth < Rational(1, 2) ? fifth : Rational(1, 2);
  GapDriver gap{basis, target, BoostConfig::make(delta, two_gap, n), res};

  auto note_witness = [&](const GapWitness& w) {
    res.vector = w.vector;
    res.coeffs = w.coeffs;
    res.achieved_dist = inf_norm(w.vector - target);
  };

  // Galloping initialization of the bracket (1+delta)^L <= d <= (1+delta)^U:
  // probe powers of two upward until Found, then downward until Empty.
  constexpr int kGallopCap = 4096;
  std::int64_t lower = 0, upper = 0;
  bool have_lower = false, have_upper = false;
  Rational probe(1);
  for (int k = 0;; ++k) {
    if (k > kGallopCap) throw SearchDefect("galloping initialization did not converge");
    BoostedGapOutcome out = gap.query(probe);
    if (out.result.found()) {
      note_witness(*out.result.witness);
      std::int64_t u = ceil_log1p(res.achieved_dist, delta);
      upper = have_upper ? std::min(upper, u) : u;
      have_upper = true;
      if (have_lower) break;
      probe /= 2;  // hunt for the Empty that pins the lower bound
    } else {
      lower = floor_log1p(probe, delta) - 1;  // d > probe/(1+delta)
      have_lower = true;
      if (have_upper) break;
      probe *= 2;
    }
  }
  if (lower > upper) lower = upper;
  res.m0 = upper - lower;
  res.trace.push_back(SearchStep{lower, upper, false});

  // Binary search, clamped after Found updates (a very close witness can
  // pull U below L; the witness certifies the upper side, so clamping L
  // preserves the bracket invariant).
  const std::int64_t step_cap = ceil_log2(std::max<std::int64_t>(res.m0, 1)) + 4;
  std::int64_t steps = 0;
  while (upper - lower >= 3) {
    if (++steps > step_cap) throw SearchDefect("binary search exceeded its step budget");
    std::int64_t prev_width = upper - lower;
    std::int64_t half = (upper - lower + 1) / 2;  // ceil((U-L)/2)
    BoostedGapOutcome out = gap.query(pow_rat(1 + delta, lower + half));
    ++res.search_calls;
    if (out.result.found()) {
      note_witness(*out.result.witness);
      upper = ceil_log1p(res.achieved_dist, delta);
      if (lower > upper) lower = upper;
    } else {
      lower = lower + half - 1;
    }
    std::int64_t width = upper - lower;
    if (2 * width > prev_width + 2) throw SearchDefect("binary search bracket failed to shrink");
    res.bracket_widths.push_back(width);
    res.trace.push_back(SearchStep{lower, upper, out.result.found()});
  }

  BoostedGapOutcome out = gap.query(pow_rat(1 + delta, upper + 1));
  ++res.search_calls;
  if (!out.result.found()) {
    throw SearchDefect("final gap query returned empty inside the certified bracket");
  }
  note_witness(*out.result.witness);
  return res;
}

}  // namespace cubecover
