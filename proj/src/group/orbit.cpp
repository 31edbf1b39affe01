#include "wordform/group/orbit.hpp"

#include <algorithm>

#include "wordform/error.hpp"

namespace wordform {

OrbitStabilizer orbit_and_stabilizer(const FiniteGroup& g, const PointAction& act, Point x, const Ceilings& ceilings) {
  if (g.order() > ceilings.elements) throw CeilingExceeded("group order", ceilings.elements);
  OrbitStabilizer out;
  std::vector<bool> mask(g.order(), false);
  for (Elem e = 0; e < g.order(); ++e) {
    Point y = act(e, x);
    if (y == x) mask[e] = true;
    out.orbit.push_back(y);
  }
  std::sort(out.orbit.begin(), out.orbit.end());
  out.orbit.erase(std::unique(out.orbit.begin(), out.orbit.end()), out.orbit.end());
  out.stabilizer = Subgroup::from_closed_mask(g, std::move(mask));
  return out;
}

}  // namespace wordform
