#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/subgroup.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// Every subgroup of `g` exactly once, in canonical order (trivial first, whole last).
///
/// Grows subgroups one generator at a time from the trivial group, which is the
/// same as closing cyclic subgroups under joins. Throws CeilingExceeded when
/// |g| exceeds `ceilings.elements` or the count exceeds `ceilings.subgroups`.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const Ceilings& ceilings = {});

/// Members of `lattice` that are normal in `h` (h itself included).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Subgroup& h, std::span<const Subgroup> lattice);

/// A subgroup of a full power base^|S| together with that power.
struct PowerSubgroup {
  std::shared_ptr<const TupleGroup> power;
  Subgroup subgroup;
};

/// H restricted to S: elements trivial outside S, projected to S.
PowerSubgroup restriction(const TupleGroup& g, const Subgroup& h, std::span<const std::size_t> coords);
/// Image of H under the projection onto S.
PowerSubgroup projection(const TupleGroup& g, const Subgroup& h, std::span<const std::size_t> coords);
/// {i : H restricted to {i} is a proper subgroup of the base}.
std::vector<std::size_t> minimal_support(const TupleGroup& g, const Subgroup& h);

}  // namespace wordform
