#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/subgroup.hpp"

namespace wordform {

using Point = std::uint64_t;
/// Image of a point under a group element.
using PointAction = std::function<Point(Elem, Point)>;

struct OrbitStabilizer {
  std::vector<Point> orbit;  // sorted
  Subgroup stabilizer;
};

/// Throws CeilingExceeded past `ceilings.elements`.
OrbitStabilizer orbit_and_stabilizer(const FiniteGroup& g, const PointAction& act, Point x,
                                     const Ceilings& ceilings = {});

}  // namespace wordform
