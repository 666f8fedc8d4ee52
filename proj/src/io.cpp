#include "cubecover/io.hpp"

namespace cubecover {

Json rat_to_json(const Rational& r) { return format_rational(r); }

Rational rat_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json rvec_to_json(const RVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rat_to_json(v(i)));
  return out;
}

RVec rvec_from_json(const Json& j) {
  RVec v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rat_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

Json rmat_to_json(const RMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

RMat rmat_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
  RMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = rat_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

Json coeffs_to_json(const Coeffs& c) {
  Json out = Json::array();
  for (const Integer& x : c) out.push_back(x.str());
  return out;
}

Coeffs coeffs_from_json(const Json& j) {
  Coeffs c;
  c.reserve(j.size());
  for (const auto& x : j) c.emplace_back(x.get<std::string>());
  return c;
}

Json box_to_json(const AxisBox& b) {
  return Json{{"lower", rvec_to_json(b.lower)}, {"upper", rvec_to_json(b.upper)}};
}

AxisBox box_from_json(const Json& j) {
  return AxisBox(rvec_from_json(j.at("lower")), rvec_from_json(j.at("upper")));
}

Json pp_to_json(const Parallelepiped& p) {
  return Json{{"E", rmat_to_json(p.map)}, {"d", rvec_to_json(p.center)}};
}

Parallelepiped pp_from_json(const Json& j) {
  return Parallelepiped{rmat_from_json(j.at("E")), rvec_from_json(j.at("d"))};
}

Json ellipsoid_to_json(const AxisEllipsoid& e) {
  return Json{{"c", rvec_to_json(e.center)}, {"s", rvec_to_json(e.sq_semi_axes)}};
}

AxisEllipsoid ellipsoid_from_json(const Json& j) {
  return AxisEllipsoid{rvec_from_json(j.at("c")), rvec_from_json(j.at("s"))};
}

Json instance_to_json(const LatticeInstance& inst) {
  Json out{{"basis", rmat_to_json(inst.basis)}, {"target", rvec_to_json(inst.target)}};
  if (inst.dist) out["dist"] = rat_to_json(*inst.dist);
  return out;
}

LatticeInstance instance_from_json(const Json& j) {
  LatticeInstance inst{rmat_from_json(j.at("basis")), rvec_from_json(j.at("target")), std::nullopt};
  if (j.contains("dist")) inst.dist = rat_from_json(j.at("dist"));
  return inst;
}

Json cover_spec_to_json(const CoverSpec& s) {
  return Json{
      {"kind", s.kind == CoverKind::BoxParallelepiped ? "box" : "ellipsoid"},
      {"dim", s.dim},
      {"eps", rat_to_json(s.eps)},
      {"per_axis_count", s.per_axis_count},
      {"total_count", s.total_count},
  };
}

namespace {

Json index_to_json(const CoverIndex& idx) {
  return Json{{"orthant", idx.orthant}, {"exponents", idx.exponents}};
}

}  // namespace

Json box_cover_to_json(const BoxCover& cover) {
  Json bodies = Json::array();
  cover.enumerate([&](const CoverIndex& idx, const Parallelepiped& p) {
    Json body = pp_to_json(p);
    body["index"] = index_to_json(idx);
    bodies.push_back(std::move(body));
    return true;
  });
  return Json{{"spec", cover_spec_to_json(cover.spec())}, {"bodies", std::move(bodies)}};
}

Json ellipsoid_cover_to_json(const EllipsoidCover& cover) {
  Json bodies = Json::array();
  cover.enumerate([&](const CoverIndex& idx, const AxisEllipsoid& e) {
    Json body = ellipsoid_to_json(e);
    body["index"] = index_to_json(idx);
    bodies.push_back(std::move(body));
    return true;
  });
  return Json{{"spec", cover_spec_to_json(cover.spec())}, {"bodies", std::move(bodies)}};
}

Json gap_result_to_json(const GapResult& r) {
  if (!r.found()) return Json{{"result", "empty"}};
  return Json{{"result", "found"},
              {"vector", rvec_to_json(r.witness->vector)},
              {"coeffs", coeffs_to_json(r.witness->coeffs)}};
}

Json approx_result_to_json(const ApproxResult& r) {
  return Json{{"vector", rvec_to_json(r.vector)},
              {"coeffs", coeffs_to_json(r.coeffs)},
              {"achieved_dist", rat_to_json(r.achieved_dist)},
              {"oracle_calls", r.oracle_calls},
              {"gap_calls", r.gap_calls},
              {"search_calls", r.search_calls},
              {"m0", r.m0}};
}

Json slab_to_json(const SlabSystem& s) {
  return Json{{"A", rmat_to_json(s.A)}, {"l", rvec_to_json(s.l)}, {"u", rvec_to_json(s.u)}};
}

SlabSystem slab_from_json(const Json& j) {
  return SlabSystem{rmat_from_json(j.at("A")), rvec_from_json(j.at("l")), rvec_from_json(j.at("u"))};
}

}  // namespace cubecover
