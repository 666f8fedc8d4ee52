#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubecover/harness.hpp"

namespace cc = cubecover;

namespace {

cc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cc::ConfigError("cannot open " + path);
  return cc::Json::parse(in);
}

void emit(const cc::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw cc::ConfigError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> dims;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
  return dims;
}

std::vector<cc::Rational> parse_eps_list(const std::string& s) {
  std::vector<cc::Rational> eps;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) eps.push_back(cc::parse_rational(item));
  return eps;
}

cc::AxisBox centered_cube(int dim, const cc::Rational& half_width) {
  cc::RVec lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    lo(j) = -half_width;
    hi(j) = half_width;
  }
  return cc::AxisBox(std::move(lo), std::move(hi));
}

// Re-checks a serialized cover: safety on all bodies, coverage on seeded
// samples of H_eps plus its corners. Returns 0 on success, 1 on failure.
int verify_cover_file(const std::string& path, std::int64_t samples, std::uint64_t seed) {
  cc::Json file = read_json_file(path);
  const cc::Json& spec = file.at("spec");
  const int dim = spec.at("dim").get<int>();
  const cc::Rational eps = cc::rat_from_json(spec.at("eps"));
  const bool is_box = spec.at("kind").get<std::string>() == "box";
  const cc::AxisBox outer = centered_cube(dim, cc::Rational(1));

  std::vector<std::pair<cc::CoverIndex, cc::Parallelepiped>> pps;
  std::vector<std::pair<cc::CoverIndex, cc::AxisEllipsoid>> ells;
  std::int64_t safety_failures = 0;
  for (const cc::Json& body : file.at("bodies")) {
    if (is_box) {
      cc::Parallelepiped p = cc::pp_from_json(body);
      if (!cc::pp_scaled_inside_box(p, outer, cc::Rational(2))) ++safety_failures;
      pps.emplace_back(cc::CoverIndex{}, std::move(p));
    } else {
      cc::AxisEllipsoid e = cc::ellipsoid_from_json(body);
      if (!cc::ellipsoid_inside_box(e, outer)) ++safety_failures;
      ells.emplace_back(cc::CoverIndex{}, std::move(e));
    }
  }

  auto covered = [&](const cc::RVec& x) {
    return is_box ? cc::cover_point_query(pps, x).has_value()
                  : cc::cover_point_query(ells, x).has_value();
  };
  const cc::AxisBox inner = centered_cube(dim, 1 - eps);
  cc::Rng rng(seed);
  std::int64_t coverage_failures = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    if (!covered(rng.point_in_box(inner, 1000))) ++coverage_failures;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    cc::RVec corner(dim);
    for (int j = 0; j < dim; ++j) {
      corner(j) = (mask >> j) & 1 ? cc::Rational(1 - eps) : cc::Rational(eps - 1);
    }
    if (!covered(corner)) ++coverage_failures;
  }

  std::cout << "bodies=" << (is_box ? pps.size() : ells.size())
            << " safety_failures=" << safety_failures
            << " coverage_failures=" << coverage_failures << "\n";
  return (safety_failures == 0 && coverage_failures == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube coverings and gap-boosted CVP in the max norm"};
  app.require_subcommand(1);

  std::string in_path, out_path, kind = "box", eps_str = "1/2", oracle = "exact";
  std::string dims_str = "1,2,3", eps_list_str = "1/2,1/10", campaign_kind = "cover-verify";
  std::string alpha_str = "2";
  int dim = 2;
  std::int64_t samples = 1000, instances = 20;
  std::uint64_t seed = 0;
  bool audit = false;

  auto* cover = app.add_subcommand("cover", "covering generators and checks");
  auto* cover_gen = cover->add_subcommand("gen", "emit a covering as JSON");
  cover_gen->add_option("--kind", kind)->check(CLI::IsMember({"box", "ellipsoid"}));
  cover_gen->add_option("--dim", dim)->required();
  cover_gen->add_option("--eps", eps_str)->required();
  cover_gen->add_option("--out", out_path);

  auto* cover_verify = cover->add_subcommand("verify", "re-check a covering file");
  cover_verify->add_option("--in", in_path)->required();
  cover_verify->add_option("--samples", samples);
  cover_verify->add_option("--seed", seed);

  auto* cover_count = cover->add_subcommand("count", "covering counts vs the bound");
  cover_count->add_option("--kind", kind)->check(CLI::IsMember({"box", "ellipsoid"}));
  cover_count->add_option("--dim", dim)->required();
  cover_count->add_option("--eps", eps_str)->required();

  auto* cvp = app.add_subcommand("cvp", "closest vector solvers");
  auto* cvp_exact = cvp->add_subcommand("exact", "exact enumeration solver");
  cvp_exact->add_option("--in", in_path)->required();
  cvp_exact->add_option("--out", out_path);

  auto* cvp_approx = cvp->add_subcommand("approx", "(1+eps)-approximation");
  cvp_approx->add_option("--in", in_path)->required();
  cvp_approx->add_option("--eps", eps_str)->required();
  cvp_approx->add_option("--oracle", oracle)->check(CLI::IsMember({"exact", "adversarial"}));
  cvp_approx->add_option("--seed", seed);
  cvp_approx->add_flag("--audit", audit, "add exact distance and ratio");
  cvp_approx->add_option("--out", out_path);

  auto* gap = app.add_subcommand("gap", "alpha-gap queries");
  auto* gap_solve = gap->add_subcommand("solve", "answer a gap instance");
  gap_solve->add_option("--in", in_path)->required();
  gap_solve->add_option("--alpha", alpha_str);
  gap_solve->add_option("--oracle", oracle)->check(CLI::IsMember({"exact", "adversarial"}));
  gap_solve->add_option("--seed", seed);
  gap_solve->add_option("--out", out_path);

  auto* ip = app.add_subcommand("ip", "integer programming reductions");
  auto* ip_reduce = ip->add_subcommand("reduce", "box-IP slab to CVP instance");
  ip_reduce->add_option("--in", in_path)->required();
  ip_reduce->add_option("--out", out_path);

  auto* campaign = app.add_subcommand("campaign", "verification campaigns");
  auto* campaign_run = campaign->add_subcommand("run", "run a campaign and report");
  campaign_run->add_option("--kind", campaign_kind)
      ->check(CLI::IsMember({"cover-verify", "count-audit", "approx-audit", "gap-budget"}));
  campaign_run->add_option("--dims", dims_str, "comma-separated dimensions");
  campaign_run->add_option("--eps", eps_list_str, "comma-separated rationals");
  campaign_run->add_option("--samples", samples);
  campaign_run->add_option("--instances", instances);
  campaign_run->add_option("--seed", seed);
  campaign_run->add_option("--oracle", oracle)->check(CLI::IsMember({"exact", "adversarial"}));
  campaign_run->add_option("--cover-kind", kind)->check(CLI::IsMember({"box", "ellipsoid"}));
  campaign_run->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cover_gen->parsed()) {
      cc::Rational eps = cc::parse_rational(eps_str);
      if (kind == "box") {
        emit(cc::box_cover_to_json(cc::BoxCover(dim, eps)), out_path);
      } else {
        emit(cc::ellipsoid_cover_to_json(cc::EllipsoidCover(dim, eps)), out_path);
      }
    } else if (cover_verify->parsed()) {
      return verify_cover_file(in_path, samples, seed);
    } else if (cover_count->parsed()) {
      cc::Rational eps = cc::parse_rational(eps_str);
      cc::CoverSpec spec = kind == "box" ? cc::BoxCover(dim, eps).spec()
                                         : cc::EllipsoidCover(dim, eps).spec();
      emit(cc::cover_spec_to_json(spec), out_path);
    } else if (cvp_exact->parsed()) {
      cc::LatticeInstance inst = cc::instance_from_json(read_json_file(in_path));
      cc::CvpResult res = cc::exact_cvp(inst.basis, inst.target);
      emit(cc::Json{{"vector", cc::rvec_to_json(res.vector)},
                    {"coeffs", cc::coeffs_to_json(res.coeffs)},
                    {"dist", cc::rat_to_json(res.dist)}},
           out_path);
    } else if (cvp_approx->parsed()) {
      cc::LatticeInstance inst = cc::instance_from_json(read_json_file(in_path));
      cc::Rational eps = cc::parse_rational(eps_str);
      cc::GapOracle two_gap = oracle == "exact" ? cc::exact_as_gap(cc::Rational(2))
                                                : cc::adversarial_2gap(seed);
      cc::ApproxResult res = cc::approx_cvp(inst.basis, inst.target, eps, two_gap);
      cc::Json j = cc::approx_result_to_json(res);
      if (audit) {
        cc::CvpResult truth = cc::exact_cvp(inst.basis, inst.target);
        j["exact_dist"] = cc::rat_to_json(truth.dist);
        if (truth.dist != 0) j["ratio"] = cc::rat_to_json(res.achieved_dist / truth.dist);
      }
      emit(j, out_path);
    } else if (gap_solve->parsed()) {
      cc::LatticeInstance inst = cc::instance_from_json(read_json_file(in_path));
      if (!inst.dist) throw cc::ConfigError("gap instance needs a dist field");
      cc::Rational alpha = cc::parse_rational(alpha_str);
      cc::GapOracle o = oracle == "exact" ? cc::exact_as_gap(alpha) : cc::adversarial_2gap(seed);
      emit(cc::gap_result_to_json(o.query(inst)), out_path);
    } else if (ip_reduce->parsed()) {
      cc::SlabSystem slab = cc::slab_from_json(read_json_file(in_path));
      emit(cc::instance_to_json(cc::box_ip_to_cvp(slab.A, slab.l, slab.u)), out_path);
    } else if (campaign_run->parsed()) {
      cc::Campaign c;
      c.kind = cc::campaign_kind_from_name(campaign_kind);
      c.dims = parse_dims(dims_str);
      c.eps_list = parse_eps_list(eps_list_str);
      c.samples = samples;
      c.instances = instances;
      c.seed = seed;
      c.oracle = oracle;
      c.cover_kind = kind == "box" ? cc::CoverKind::BoxParallelepiped : cc::CoverKind::Ellipsoid;
      cc::Report report = cc::run_campaign(c);
      emit(report.json, out_path);
      return report.passed ? 0 : 1;
    }
  } catch (const cc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
