#include "wordform/group/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace wordform {

namespace {
constexpr std::size_t kTableLimit = 4096;
}

std::shared_ptr<const PermGroup> PermGroup::generate(std::size_t degree, std::vector<Perm> generators,
                                                     const Ceilings& ceilings) {
  if (degree == 0) throw PreconditionError("degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  auto id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > ceilings.elements) throw CeilingExceeded("group order", ceilings.elements);
        queue.push_back(std::move(y));
      }
    }
  }

  std::shared_ptr<PermGroup> grp(new PermGroup());
  grp->degree_ = degree;
  grp->elements_.assign(seen.begin(), seen.end());
  std::sort(grp->elements_.begin(), grp->elements_.end());
  grp->index_.reserve(grp->elements_.size());
  for (Elem i = 0; i < grp->elements_.size(); ++i) grp->index_.emplace(grp->elements_[i], i);

  const auto n = grp->elements_.size();
  grp->inverses_.resize(n);
  for (Elem i = 0; i < n; ++i) grp->inverses_[i] = grp->index_.at(grp->elements_[i].inverse());
  if (n <= kTableLimit) {
    grp->table_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        grp->table_[a * n + b] = grp->index_.at(grp->elements_[a] * grp->elements_[b]);
  }
  for (auto& g : generators) grp->generator_elems_.push_back(grp->index_.at(g));
  grp->generator_perms_ = std::move(generators);
  return grp;
}

std::shared_ptr<const PermGroup> PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<std::uint32_t> cycle(degree), swap(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
    gens.emplace_back(std::move(cycle));
    gens.emplace_back(std::move(swap));
  }
  return generate(degree, std::move(gens));
}

std::shared_ptr<const PermGroup> PermGroup::cyclic(std::size_t degree) {
  std::vector<std::uint32_t> cycle(degree);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
  std::vector<Perm> gens;
  if (degree >= 2) gens.emplace_back(std::move(cycle));
  return generate(degree, std::move(gens));
}

std::optional<Elem> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PermGroup::multiply(Elem a, Elem b) const {
  const auto n = elements_.size();
  if (!table_.empty()) return table_[a * n + b];
  return index_.at(elements_[a] * elements_[b]);
}

}  // namespace wordform
