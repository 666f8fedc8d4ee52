#include <doctest.h>

#include "test_util.hpp"

using namespace cctest;

TEST_CASE("gen_instances: deterministic and nonsingular") {
  InstanceGen g{.seed = 1, .dim = 2, .entry_bound = 5, .count = 3};
  auto a = gen_instances(g);
  auto b = gen_instances(g);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].basis == b[i].basis);
    CHECK(a[i].target == b[i].target);
    CHECK_NOTHROW(invert(a[i].basis));
    for (Eigen::Index j = 0; j < 2; ++j) CHECK(denominator(a[i].target(j)) <= 100);
  }

  for (const auto& inst : gen_instances({.seed = 4, .dim = 1, .entry_bound = 5, .count = 10})) {
    CHECK(inst.basis(0, 0) != 0);
  }
}

TEST_CASE("campaigns: pass and replay byte-identically") {
  Campaign cover{.kind = CampaignKind::CoverVerify,
                 .dims = {2},
                 .eps_list = {rat("1/10")},
                 .samples = 500,
                 .instances = 0,
                 .seed = 7};
  Report r1 = run_campaign(cover);
  Report r2 = run_campaign(cover);
  CHECK(r1.passed);
  CHECK(r1.json.dump() == r2.json.dump());

  Campaign count{.kind = CampaignKind::CountAudit,
                 .dims = {1, 2},
                 .eps_list = {rat("1/2"), rat("1/10")},
                 .seed = 5};
  Report c = run_campaign(count);
  CHECK(c.passed);

  Campaign approx{.kind = CampaignKind::ApproxAudit,
                  .dims = {2},
                  .eps_list = {rat("1/2")},
                  .instances = 5,
                  .seed = 13,
                  .oracle = "adversarial"};
  Report a1 = run_campaign(approx);
  Report a2 = run_campaign(approx);
  CHECK(a1.passed);
  CHECK(a1.json.dump() == a2.json.dump());

  Campaign budget{.kind = CampaignKind::GapBudget,
                  .dims = {2},
                  .eps_list = {rat("1/2")},
                  .instances = 5,
                  .seed = 17};
  CHECK(run_campaign(budget).passed);
}

TEST_CASE("campaigns: config validation") {
  Campaign bad{.kind = CampaignKind::CoverVerify, .dims = {9}, .eps_list = {rat("1/2")}};
  CHECK_THROWS_AS(run_campaign(bad), ConfigError);
  CHECK_THROWS_AS(campaign_kind_from_name("nonsense"), ConfigError);
  CHECK(campaign_kind_from_name("cover-verify") == CampaignKind::CoverVerify);
  CHECK(campaign_kind_from_name("gap-budget") == CampaignKind::GapBudget);
}
