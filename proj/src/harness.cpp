#include "cubecover/harness.hpp"

namespace cubecover {

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ConfigError("int_in: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(eng_() % span);
}

Rational Rng::rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  std::int64_t q = int_in(1, max_den);
  // p/q in [0,1], then map affinely onto [lo, hi].
  std::int64_t p = int_in(0, q);
  return lo + (hi - lo) * make_rational(p, q);
}

RVec Rng::point_in_box(const AxisBox& box, std::int64_t max_den) {
  RVec x(box.dim());
  for (Eigen::Index j = 0; j < box.dim(); ++j) {
    x(j) = rational_in(box.lower(j), box.upper(j), max_den);
  }
  return x;
}

std::vector<LatticeInstance> gen_instances(const InstanceGen& g) {
  if (g.entry_bound < 1) throw ConfigError("instance gen: entry_bound must be >= 1");
  if (g.dim < 1 || g.dim > kEnumerationDimLimit) throw ConfigError("instance gen: bad dimension");
  Rng rng(g.seed);
  std::vector<LatticeInstance> out;
  out.reserve(static_cast<std::size_t>(g.count));
  while (std::cmp_less(out.size(), g.count)) {
    RMat basis(g.dim, g.dim);
    for (Eigen::Index i = 0; i < g.dim; ++i) {
      for (Eigen::Index j = 0; j < g.dim; ++j) {
        basis(i, j) = Rational(rng.int_in(-g.entry_bound, g.entry_bound));
      }
    }
    try {
      invert(basis);
    } catch (const SingularMatrix&) {
      continue;  // resample
    }
    RVec target(g.dim);
    for (Eigen::Index i = 0; i < g.dim; ++i) {
      std::int64_t q = rng.int_in(1, 100);
      std::int64_t p = rng.int_in(-g.entry_bound * q, g.entry_bound * q);
      target(i) = make_rational(p, q);
    }
    out.push_back(LatticeInstance{std::move(basis), std::move(target), std::nullopt});
  }
  return out;
}

CampaignKind campaign_kind_from_name(const std::string& name) {
  if (name == "cover-verify") return CampaignKind::CoverVerify;
  if (name == "count-audit") return CampaignKind::CountAudit;
  if (name == "approx-audit") return CampaignKind::ApproxAudit;
  if (name == "gap-budget") return CampaignKind::GapBudget;
  throw ConfigError("unknown campaign kind: " + name);
}

namespace {

constexpr std::uint64_t kCaseSeedStride = 0x9E3779B97F4A7C15ULL;

AxisBox cube(int dim, const Rational& half_width) {
  RVec lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    lo(j) = -half_width;
    hi(j) = half_width;
  }
  return AxisBox(std::move(lo), std::move(hi));
}

std::vector<RVec> cube_corners(int dim, const Rational& half_width) {
  std::vector<RVec> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    RVec corner(dim);
    for (int j = 0; j < dim; ++j) {
      corner(j) = (mask >> j) & 1 ? half_width : Rational(-half_width);
    }
    out.push_back(std::move(corner));
  }
  return out;
}

GapOracle make_oracle(const std::string& name, std::uint64_t seed) {
  if (name == "exact") return exact_as_gap(Rational(2));
  if (name == "adversarial") return adversarial_2gap(seed);
  throw ConfigError("unknown oracle: " + name);
}

Json cover_verify_case(const Campaign& c, int dim, const Rational& eps,
                       std::uint64_t case_seed, bool& passed) {
  Json out{{"dim", dim}, {"eps", rat_to_json(eps)}};
  const AxisBox outer = cube(dim, Rational(1));
  Json counterexamples = Json::array();

  std::int64_t bodies = 0;
  std::int64_t safety_failures = 0;
  std::optional<BoxCover> box_cover;
  std::optional<EllipsoidCover> ell_cover;
  if (c.cover_kind == CoverKind::BoxParallelepiped) {
    box_cover.emplace(dim, eps);
    box_cover->enumerate([&](const CoverIndex&, const Parallelepiped& p) {
      ++bodies;
      if (!pp_scaled_inside_box(p, outer, Rational(2))) {
        ++safety_failures;
        counterexamples.push_back(Json{{"kind", "safety"}, {"body", pp_to_json(p)}});
      }
      return true;
    });
  } else {
    ell_cover.emplace(dim, eps);
    ell_cover->enumerate([&](const CoverIndex&, const AxisEllipsoid& e) {
      ++bodies;
      if (!ellipsoid_inside_box(e, outer)) {
        ++safety_failures;
        counterexamples.push_back(Json{{"kind", "safety"}, {"body", ellipsoid_to_json(e)}});
      }
      return true;
    });
  }

  const AxisBox inner = cube(dim, 1 - eps);
  auto covered = [&](const RVec& x) {
    return box_cover ? box_cover->locate(x).has_value() : ell_cover->locate(x).has_value();
  };

  std::int64_t coverage_failures = 0;
  Rng rng(case_seed);
  for (std::int64_t i = 0; i < c.samples; ++i) {
    RVec x = rng.point_in_box(inner, 1000);
    if (!covered(x)) {
      ++coverage_failures;
      if (counterexamples.size() < 16) {
        counterexamples.push_back(Json{{"kind", "coverage"}, {"point", rvec_to_json(x)}});
      }
    }
  }
  for (const RVec& corner : cube_corners(dim, 1 - eps)) {
    if (!covered(corner)) {
      ++coverage_failures;
      counterexamples.push_back(Json{{"kind", "coverage-corner"}, {"point", rvec_to_json(corner)}});
    }
  }

  bool ok = safety_failures == 0 && coverage_failures == 0;
  passed = passed && ok;
  out["bodies"] = bodies;
  out["safety_failures"] = safety_failures;
  out["coverage_failures"] = coverage_failures;
  out["counterexamples"] = std::move(counterexamples);
  out["pass"] = ok;
  return out;
}

Json count_audit_case(int dim, const Rational& eps, bool& passed) {
  Json out{{"dim", dim}, {"eps", rat_to_json(eps)}};
  BoxCover cover(dim, eps);

  std::int64_t emitted = 0;
  std::int64_t lemma_max = 0;
  GridSpec grid = make_grid_spec(dim, eps);
  bool lemma_ok = true;
  cover.enumerate([&](const CoverIndex& idx, const Parallelepiped&) {
    ++emitted;
    bool positive = true;
    for (int s : idx.orthant) positive = positive && s > 0;
    if (!positive) return true;
    // Transport x -> 1 - x takes the positive-orthant body into the
    // positive orthant with its 2-scaling; the counting lemma applies there.
    RVec lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
      Rational v = pow_rat(Rational(1, 3), idx.exponents[static_cast<std::size_t>(j)]);
      lo(j) = v / 3;
      hi(j) = v;
    }
    std::int64_t count = count_grid_in_body(pp_from_box(AxisBox(lo, hi)), grid);
    lemma_max = std::max(lemma_max, count);
    lemma_ok = lemma_ok && count <= (std::int64_t{1} << dim);
    return true;
  });

  std::int64_t bound_exp = exponent_bound(eps, 3);
  bool formula_ok = emitted == cover.spec().total_count;
  // emitted <= 2^n (1+log2(1/eps))^n  <=>  eps * 2^bound_exp <= 1.
  bool count_bound_ok = eps * pow_rat(Rational(2), static_cast<long>(bound_exp)) <= 1;
  std::int64_t grid_size = 1;
  for (int j = 0; j < dim; ++j) grid_size *= grid.levels;
  bool consequence_ok = emitted * (std::int64_t{1} << dim) >= grid_size;

  bool ok = formula_ok && count_bound_ok && lemma_ok && consequence_ok;
  passed = passed && ok;
  out["emitted"] = emitted;
  out["per_axis_count"] = cover.spec().per_axis_count;
  out["grid_size"] = grid_size;
  out["grid_levels"] = grid.levels;
  out["lemma_max_grid_points"] = lemma_max;
  out["lemma_bound"] = std::int64_t{1} << dim;
  out["formula_ok"] = formula_ok;
  out["count_bound_ok"] = count_bound_ok;
  out["lemma_ok"] = lemma_ok;
  out["consequence_ok"] = consequence_ok;
  out["pass"] = ok;
  return out;
}

Json approx_audit_case(const Campaign& c, int dim, const Rational& eps,
                       std::uint64_t case_seed, bool& passed) {
  Json out{{"dim", dim}, {"eps", rat_to_json(eps)}};
  GapOracle oracle = make_oracle(c.oracle, case_seed);
  auto insts = gen_instances(InstanceGen{case_seed, dim, 5, c.instances});
  Json cases = Json::array();
  std::int64_t failures = 0;
  for (const LatticeInstance& inst : insts) {
    CvpResult truth = exact_cvp(inst.basis, inst.target);
    ApproxResult approx = approx_cvp(inst.basis, inst.target, eps, oracle);
    bool lattice_ok =
        inf_norm(inst.basis * coeffs_to_rvec(approx.coeffs) - approx.vector) == 0;
    bool ratio_ok = approx.achieved_dist <= (1 + eps) * truth.dist;
    if (!lattice_ok || !ratio_ok) {
      ++failures;
      cases.push_back(Json{{"instance", instance_to_json(inst)},
                           {"exact_dist", rat_to_json(truth.dist)},
                           {"achieved_dist", rat_to_json(approx.achieved_dist)}});
    }
  }
  bool ok = failures == 0;
  passed = passed && ok;
  out["instances"] = static_cast<std::int64_t>(insts.size());
  out["failures"] = failures;
  out["counterexamples"] = std::move(cases);
  out["pass"] = ok;
  return out;
}

Json gap_budget_case(const Campaign& c, int dim, const Rational& eps,
                     std::uint64_t case_seed, bool& passed) {
  Json out{{"dim", dim}, {"eps", rat_to_json(eps)}};
  GapOracle oracle = make_oracle(c.oracle, case_seed);
  BoostConfig cfg = BoostConfig::make(eps, oracle, dim);
  auto insts = gen_instances(InstanceGen{case_seed, dim, 5, c.instances});
  Rng rng(case_seed + 1);

  std::int64_t bound_exp = exponent_bound(cfg.delta, 3);
  bool budget_formula_ok =
      bound_exp < 1 || eps * pow_rat(Rational(2), static_cast<long>(bound_exp - 1)) <= 1;

  Json cases = Json::array();
  std::int64_t failures = 0;
  std::int64_t max_calls = 0;
  for (const LatticeInstance& base : insts) {
    CvpResult truth = exact_cvp(base.basis, base.target);
    if (truth.dist == 0) continue;
    static const Rational kFactors[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    LatticeInstance inst = base;
    inst.dist = truth.dist * kFactors[rng.int_in(0, 3)];
    BoostedGapOutcome res = boosted_gap(inst, cfg);
    max_calls = std::max(max_calls, res.oracle_calls);
    bool sound = true;
    if (res.result.found()) {
      sound = inf_norm(res.result.witness->vector - inst.target) <= *inst.dist;
    } else {
      sound = truth.dist * (1 + eps) > *inst.dist;
    }
    bool budget_ok = res.oracle_calls <= cfg.cover->spec().total_count;
    if (!sound || !budget_ok) {
      ++failures;
      cases.push_back(Json{{"instance", instance_to_json(inst)},
                           {"exact_dist", rat_to_json(truth.dist)},
                           {"oracle_calls", res.oracle_calls}});
    }
  }
  bool ok = failures == 0 && budget_formula_ok;
  passed = passed && ok;
  out["instances"] = static_cast<std::int64_t>(insts.size());
  out["cover_bodies"] = cfg.cover->spec().total_count;
  out["max_oracle_calls"] = max_calls;
  out["budget_formula_ok"] = budget_formula_ok;
  out["failures"] = failures;
  out["counterexamples"] = std::move(cases);
  out["pass"] = ok;
  return out;
}

}  // namespace

Report run_campaign(const Campaign& c) {
  if (c.dims.empty() || c.eps_list.empty()) throw ConfigError("campaign needs dims and eps");
  for (int d : c.dims) {
    if (d < 1 || d > kEnumerationDimLimit) throw ConfigError("campaign: dimension out of range");
  }

  const char* name = nullptr;
  switch (c.kind) {
    case CampaignKind::CoverVerify: name = "cover-verify"; break;
    case CampaignKind::CountAudit: name = "count-audit"; break;
    case CampaignKind::ApproxAudit: name = "approx-audit"; break;
    case CampaignKind::GapBudget: name = "gap-budget"; break;
  }

  Json eps_json = Json::array();
  for (const Rational& e : c.eps_list) eps_json.push_back(rat_to_json(e));
  Json report{{"campaign", name},
              {"params",
               Json{{"dims", c.dims},
                    {"eps", std::move(eps_json)},
                    {"samples", c.samples},
                    {"instances", c.instances},
                    {"seed", c.seed},
                    {"oracle", c.oracle},
                    {"cover_kind",
                     c.cover_kind == CoverKind::BoxParallelepiped ? "box" : "ellipsoid"}}}};

  bool passed = true;
  Json cases = Json::array();
  std::uint64_t case_index = 0;
  for (int dim : c.dims) {
    for (const Rational& eps : c.eps_list) {
      std::uint64_t case_seed = c.seed ^ (kCaseSeedStride * ++case_index);
      switch (c.kind) {
        case CampaignKind::CoverVerify:
          cases.push_back(cover_verify_case(c, dim, eps, case_seed, passed));
          break;
        case CampaignKind::CountAudit:
          cases.push_back(count_audit_case(dim, eps, passed));
          break;
        case CampaignKind::ApproxAudit:
          cases.push_back(approx_audit_case(c, dim, eps, case_seed, passed));
          break;
        case CampaignKind::GapBudget:
          cases.push_back(gap_budget_case(c, dim, eps, case_seed, passed));
          break;
      }
    }
  }
  report["cases"] = std::move(cases);
  report["passed"] = passed;
  return Report{std::move(report), passed};
}

}  // namespace cubecover
