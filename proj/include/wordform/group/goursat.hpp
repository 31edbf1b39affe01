#pragma once

#include <utility>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/quotient.hpp"
#include "wordform/group/subgroup.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// K ≤ A×B presented as {(a, b) : θ(aM) = bN} with A = π_1(K), B = π_2(K),
/// M = K↾{1}, N = K↾{2}. Subgroups live in the base group G; θ maps coset
/// representatives of M in A to coset representatives of N in B.
struct GoursatTriple {
  Subgroup a, m, b, n;
  std::vector<std::pair<Elem, Elem>> theta;
};

/// `g2` must be the full power G^2.
GoursatTriple goursat_decompose(const TupleGroup& g2, const Subgroup& k);
Subgroup goursat_reconstruct(const TupleGroup& g2, const GoursatTriple& t);

/// Every subgroup of G^2 exactly once, in canonical order, from the lattice of G.
std::vector<Subgroup> enumerate_product_subgroups(const TupleGroup& g2, const std::vector<Subgroup>& base_lattice,
                                                  const Ceilings& ceilings = {});

}  // namespace wordform
