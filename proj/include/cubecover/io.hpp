#ifndef CUBECOVER_IO_HPP
#define CUBECOVER_IO_HPP

#include <json.hpp>

#include "cubecover/boosting.hpp"
#include "cubecover/covering.hpp"
#include "cubecover/cvp.hpp"

namespace cubecover {

// Reports and file formats keep insertion order so replays are
// byte-identical.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rational& r);
Rational rat_from_json(const Json& j);

Json rvec_to_json(const RVec& v);
RVec rvec_from_json(const Json& j);

Json rmat_to_json(const RMat& m);
RMat rmat_from_json(const Json& j);

Json coeffs_to_json(const Coeffs& c);
Coeffs coeffs_from_json(const Json& j);

// {"lower":[...],"upper":[...]}
Json box_to_json(const AxisBox& b);
AxisBox box_from_json(const Json& j);

// {"E":[[...]],"d":[...]}
Json pp_to_json(const Parallelepiped& p);
Parallelepiped pp_from_json(const Json& j);

// {"c":[...],"s":[...]}
Json ellipsoid_to_json(const AxisEllipsoid& e);
AxisEllipsoid ellipsoid_from_json(const Json& j);

// {"basis":[[...]],"target":[...],"dist":"p/q"?}
Json instance_to_json(const LatticeInstance& inst);
LatticeInstance instance_from_json(const Json& j);

Json cover_spec_to_json(const CoverSpec& s);

// {spec:{...}, bodies:[...]}
Json box_cover_to_json(const BoxCover& cover);
Json ellipsoid_cover_to_json(const EllipsoidCover& cover);

Json gap_result_to_json(const GapResult& r);
Json approx_result_to_json(const ApproxResult& r);

// {"A":[[...]],"l":[...],"u":[...]}
struct SlabSystem {
  RMat A;
  RVec l;
  RVec u;
};
Json slab_to_json(const SlabSystem& s);
SlabSystem slab_from_json(const Json& j);

}  // namespace cubecover

#endif
