#pragma once

#include <cstdint>
#include <vector>

#include "wordform/group/subgroup.hpp"

namespace wordform {

/// The quotient A1/A0 of a section A0 ◁ A1 ≤ G, as a small Cayley table.
///
/// Coset 0 is A0 itself. Representatives are the least element of each coset.
struct CosetTable {
  std::vector<std::int32_t> coset_of;  // per element of G, -1 outside A1
  std::vector<Elem> reps;
  std::vector<std::uint32_t> table;    // row-major products of cosets

  std::size_t order() const noexcept { return reps.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * reps.size() + b]; }
};

/// Throws PreconditionError unless a0 ≤ a1 and a0 is normal in a1.
CosetTable quotient(const FiniteGroup& g, const Subgroup& a1, const Subgroup& a0);

/// Every isomorphism x -> y between two quotients, as image lists over cosets.
std::vector<std::vector<std::uint32_t>> find_isomorphisms(const CosetTable& x, const CosetTable& y);

}  // namespace wordform
