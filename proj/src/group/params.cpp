#include "wordform/group/params.hpp"

#include <algorithm>

#include "wordform/group/lattice.hpp"

namespace wordform {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

bool is_simple(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& lattice) {
  if (h.size() < 2) return false;
  std::size_t count = 0;
  for (const auto& s : lattice)
    if (s.is_subgroup_of(h) && is_normal_in(g, s, h)) ++count;
  return count == 2;
}

std::size_t min_faithful_degree(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& lattice) {
  if (!is_simple(g, h, lattice)) throw PreconditionError("group is not simple");
  std::size_t best = h.size();
  for (const auto& a : lattice)
    if (a.size() < h.size() && a.is_subgroup_of(h)) best = std::min(best, h.size() / a.size());
  return best;
}

std::size_t min_faithful_degree(const FiniteGroup& g, const Ceilings& ceilings) {
  const auto lattice = enumerate_subgroups(g, ceilings);
  return min_faithful_degree(g, lattice.back(), lattice);
}

std::uint64_t q_param(const FiniteGroup& g) {
  std::uint64_t best = 1;
  for (Elem e = 0; e < g.order(); ++e) {
    auto o = g.element_order(e);
    if (is_prime_power(o)) best = std::max(best, o);
  }
  return best;
}

std::size_t n_param(const FiniteGroup& g, const Ceilings& ceilings) {
  const auto lattice = enumerate_subgroups(g, ceilings);
  std::size_t best = 1;
  for (const auto& h : lattice)
    if (is_simple(g, h, lattice)) best = std::max(best, min_faithful_degree(g, h, lattice));
  return best;
}

}  // namespace wordform
