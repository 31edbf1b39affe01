#pragma once

#include <cstdint>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/subgroup.hpp"

namespace wordform {

/// True iff H has exactly two normal subgroups among the members of `lattice` inside H.
bool is_simple(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& lattice);

/// min over proper A < H of [H:A], for H simple. Throws PreconditionError otherwise.
std::size_t min_faithful_degree(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& lattice);
std::size_t min_faithful_degree(const FiniteGroup& g, const Ceilings& ceilings = {});

/// Largest prime power q with an element of order q.
std::uint64_t q_param(const FiniteGroup& g);

/// max over simple subgroups H ≤ G of min_faithful_degree(H); 1 for the trivial group.
std::size_t n_param(const FiniteGroup& g, const Ceilings& ceilings = {});

bool is_prime_power(std::uint64_t q);

}  // namespace wordform
