#include <doctest.h>

#include "test_util.hpp"

using namespace cctest;

TEST_CASE("rational json round trip") {
  CHECK(rat_to_json(rat("3/4")) == "3/4");
  CHECK(rat_to_json(rat("-5")) == "-5");
  CHECK(rat_from_json(Json("6/4")) == rat("3/2"));
  CHECK(rat_from_json(Json("7")) == 7);
  CHECK_THROWS(rat_from_json(Json("1/0")));
}

TEST_CASE("vector / matrix / coeffs round trips") {
  RVec v = vec({"1/2", "-3", "0"});
  CHECK(rvec_from_json(rvec_to_json(v)) == v);

  RMat m = mat({{"1", "2/3"}, {"-1/7", "0"}});
  CHECK(rmat_from_json(rmat_to_json(m)) == m);

  Coeffs c{-2, 0, 5};
  CHECK(coeffs_from_json(coeffs_to_json(c)) == c);
}

TEST_CASE("geometry round trips") {
  AxisBox b(vec({"-1", "0"}), vec({"1/3", "2"}));
  Json jb = box_to_json(b);
  CHECK(jb.contains("lower"));
  CHECK(jb.contains("upper"));
  AxisBox b2 = box_from_json(jb);
  CHECK(b2.lower == b.lower);
  CHECK(b2.upper == b.upper);

  Parallelepiped p{mat({{"3", "0"}, {"1", "2"}}), vec({"1/2", "-1/4"})};
  Json jp = pp_to_json(p);
  CHECK(jp.contains("E"));
  CHECK(jp.contains("d"));
  Parallelepiped p2 = pp_from_json(jp);
  CHECK(p2.map == p.map);
  CHECK(p2.center == p.center);

  AxisEllipsoid e{vec({"1/3", "1/3"}), vec({"4/9", "4/9"})};
  Json je = ellipsoid_to_json(e);
  CHECK(je.contains("c"));
  CHECK(je.contains("s"));
  AxisEllipsoid e2 = ellipsoid_from_json(je);
  CHECK(e2.center == e.center);
  CHECK(e2.sq_semi_axes == e.sq_semi_axes);
}

TEST_CASE("instance round trip with and without dist") {
  LatticeInstance with{mat({{"2", "0"}, {"1", "1"}}), vec({"1", "0"}), rat("1/2")};
  Json j = instance_to_json(with);
  CHECK(j.contains("basis"));
  CHECK(j.contains("target"));
  CHECK(j["dist"] == "1/2");
  LatticeInstance round = instance_from_json(j);
  CHECK(round.basis == with.basis);
  CHECK(round.target == with.target);
  CHECK(*round.dist == rat("1/2"));

  LatticeInstance without{RMat::Identity(1, 1), vec({"53/10"}), std::nullopt};
  Json j2 = instance_to_json(without);
  CHECK_FALSE(j2.contains("dist"));
  CHECK_FALSE(instance_from_json(j2).dist.has_value());
}

TEST_CASE("cover serialization carries spec and all bodies") {
  BoxCover cover(2, rat("1/2"));
  Json j = box_cover_to_json(cover);
  CHECK(j["spec"]["dim"] == 2);
  CHECK(j["spec"]["eps"] == "1/2");
  CHECK(j["bodies"].size() == 4);
  for (const auto& body : j["bodies"]) {
    Parallelepiped p = pp_from_json(body);
    CHECK(p.dim() == 2);
  }

  EllipsoidCover ec(2, rat("1/2"));
  Json je = ellipsoid_cover_to_json(ec);
  CHECK(je["bodies"].size() == je["spec"]["total_count"].get<std::int64_t>());
  AxisEllipsoid e = ellipsoid_from_json(je["bodies"][0]);
  CHECK(e.dim() == 2);
}

TEST_CASE("slab round trip") {
  SlabSystem s{mat({{"1", "0"}, {"1", "1"}}), vec({"0", "0"}), vec({"2", "2"})};
  Json j = slab_to_json(s);
  SlabSystem s2 = slab_from_json(j);
  CHECK(s2.A == s.A);
  CHECK(s2.l == s.l);
  CHECK(s2.u == s.u);
}

TEST_CASE("serialization is byte-stable") {
  BoxCover cover(2, rat("1/10"));
  CHECK(box_cover_to_json(cover).dump() == box_cover_to_json(cover).dump());

  ApproxResult r = approx_cvp(mat({{"3", "1"}, {"0", "2"}}), vec({"7/3", "-5/7"}),
                              rat("1/10"), adversarial_2gap(9));
  CHECK(approx_result_to_json(r).dump() == approx_result_to_json(r).dump());
}

TEST_CASE("gap result serialization") {
  Json empty = gap_result_to_json(GapResult::empty());
  CHECK(empty["result"] == "empty");

  GapOracle oracle = exact_as_gap(2);
  LatticeInstance inst{RMat::Identity(2, 2), vec({"1/2", "1/2"}), rat("1/2")};
  Json found = gap_result_to_json(oracle.query(inst));
  CHECK(found["result"] == "found");
  CHECK(rvec_from_json(found["vector"]).size() == 2);
  CHECK(coeffs_from_json(found["coeffs"]).size() == 2);
}
