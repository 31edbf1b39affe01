#include "wordform/group/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace wordform {

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const Ceilings& ceilings) {
  const auto n = g.order();
  if (n > ceilings.elements) throw CeilingExceeded("group order", ceilings.elements);

  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::deque<const Subgroup*> queue;
  auto add = [&](Subgroup s) {
    auto [it, inserted] = seen.insert(std::move(s));
    if (inserted) {
      if (seen.size() > ceilings.subgroups) throw CeilingExceeded("subgroup count", ceilings.subgroups);
      queue.push_back(&*it);
    }
  };
  add(Subgroup::trivial(g));

  std::vector<bool> covered(n);
  while (!queue.empty()) {
    const Subgroup& s = *queue.front();
    queue.pop_front();
    // <S, x> depends only on the coset xS.
    covered = s.mask();
    for (Elem x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (auto e : s.elements()) covered[g.multiply(x, e)] = true;
      std::vector<Elem> gens = s.generators();
      gens.push_back(x);
      std::vector<bool> mask = s.mask();
      close_mask(g, mask, gens, gens.size() - 1);
      add(Subgroup::from_closed_mask(g, std::move(mask)));
    }
  }

  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Subgroup& h, std::span<const Subgroup> lattice) {
  std::vector<Subgroup> out;
  for (const auto& s : lattice)
    if (s.is_subgroup_of(h) && is_normal_in(g, s, h)) out.push_back(s);
  return out;
}

namespace {

PowerSubgroup collect(const TupleGroup& g, const Subgroup& h, std::span<const std::size_t> coords, bool restrict) {
  for (auto c : coords)
    if (c >= g.arity()) throw PreconditionError("coordinate out of range");
  auto power = TupleGroup::make(g.base_ptr(), coords.size(), Constraint::full);
  std::vector<bool> inside(g.arity(), false);
  for (auto c : coords) inside[c] = true;
  std::vector<bool> mask(power->order(), false);
  std::vector<Elem> sub(coords.size());
  const Elem one = g.base().identity();
  for (auto e : h.elements()) {
    auto t = g.tuple(e);
    if (restrict) {
      bool trivial_outside = true;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (!inside[j] && t[j] != one) {
          trivial_outside = false;
          break;
        }
      if (!trivial_outside) continue;
    }
    for (std::size_t j = 0; j < coords.size(); ++j) sub[j] = t[coords[j]];
    mask[*power->encode(sub)] = true;
  }
  return {power, Subgroup::from_closed_mask(*power, std::move(mask))};
}

}  // namespace

PowerSubgroup restriction(const TupleGroup& g, const Subgroup& h, std::span<const std::size_t> coords) {
  return collect(g, h, coords, true);
}

PowerSubgroup projection(const TupleGroup& g, const Subgroup& h, std::span<const std::size_t> coords) {
  return collect(g, h, coords, false);
}

std::vector<std::size_t> minimal_support(const TupleGroup& g, const Subgroup& h) {
  std::vector<std::size_t> out;
  const Elem one = g.base().identity();
  for (std::size_t i = 0; i < g.arity(); ++i) {
    std::vector<bool> seen(g.base().order(), false);
    std::size_t count = 0;
    for (auto e : h.elements()) {
      auto t = g.tuple(e);
      bool trivial_outside = true;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i && t[j] != one) {
          trivial_outside = false;
          break;
        }
      if (trivial_outside && !seen[t[i]]) {
        seen[t[i]] = true;
        ++count;
      }
    }
    if (count < g.base().order()) out.push_back(i);
  }
  return out;
}

}  // namespace wordform
