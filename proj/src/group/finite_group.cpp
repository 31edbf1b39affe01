#include "wordform/group/finite_group.hpp"

namespace wordform {

std::uint64_t FiniteGroup::element_order(Elem a) const {
  std::uint64_t n = 1;
  for (Elem x = a; x != identity(); x = multiply(x, a)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  auto gens = generators();
  for (auto a : gens)
    for (auto b : gens)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

}  // namespace wordform
