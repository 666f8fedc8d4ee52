#ifndef CUBECOVER_HARNESS_HPP
#define CUBECOVER_HARNESS_HPP

#include <random>
#include <string>
#include <vector>

#include "cubecover/io.hpp"

namespace cubecover {

/// Seeded generator shared by campaigns and the CLI. The engine is
/// mt19937_64 (bit-reproducible across platforms); bounded draws go
/// through modulo reduction rather than std distributions, which are not
/// portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi);  // inclusive

  /// Rational in [lo, hi] with denominator at most max_den.
  Rational rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den);

  RVec point_in_box(const AxisBox& box, std::int64_t max_den);

 private:
  std::mt19937_64 eng_;
};

struct InstanceGen {
  std::uint64_t seed = 0;
  int dim = 2;
  std::int64_t entry_bound = 5;
  std::int64_t count = 1;
};

/// Reproducible nonsingular integer bases with rational targets of
/// denominator at most 100; singular draws are resampled.
std::vector<LatticeInstance> gen_instances(const InstanceGen& g);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CampaignKind { CoverVerify, CountAudit, ApproxAudit, GapBudget };

struct Campaign {
  CampaignKind kind = CampaignKind::CoverVerify;
  std::vector<int> dims;
  std::vector<Rational> eps_list;
  std::int64_t samples = 1000;
  std::int64_t instances = 20;
  std::uint64_t seed = 0;
  std::string oracle = "exact";  // "exact" | "adversarial"
  CoverKind cover_kind = CoverKind::BoxParallelepiped;
};

struct Report {
  Json json;
  bool passed = false;
};

Report run_campaign(const Campaign& c);

CampaignKind campaign_kind_from_name(const std::string& name);

}  // namespace cubecover

#endif
