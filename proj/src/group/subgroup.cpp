#include "wordform/group/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wordform/error.hpp"

namespace wordform {

namespace {

std::vector<Elem> members(const std::vector<bool>& mask) {
  std::vector<Elem> out;
  for (Elem e = 0; e < mask.size(); ++e)
    if (mask[e]) out.push_back(e);
  return out;
}

// Greedy generating set: keep an element only if it is not yet generated.
// Elements are visited with a fixed stride, which tends to give few generators.
std::vector<Elem> greedy_generators(const FiniteGroup& g, const std::vector<Elem>& elements, std::size_t target) {
  std::vector<Elem> gens;
  std::vector<bool> span(g.order(), false);
  span[g.identity()] = true;
  const std::size_t n = elements.size();
  std::size_t step = std::max<std::size_t>(1, n * 5 / 8);
  while (std::gcd(step, n) != 1) ++step;
  std::size_t spanned = 1;
  for (std::size_t i = 0, j = 0; i < n && spanned < target; ++i, j = (j + step) % n) {
    const auto e = elements[j];
    if (span[e]) continue;
    gens.push_back(e);
    close_mask(g, span, gens, gens.size() - 1);
    spanned = static_cast<std::size_t>(std::count(span.begin(), span.end(), true));
  }
  return gens;
}

}  // namespace

void close_mask(const FiniteGroup& g, std::vector<bool>& mask, std::span<const Elem> gens, std::size_t closed) {
  closed = std::min(closed, gens.size());
  std::vector<Elem> queue;
  auto visit = [&](Elem y) {
    if (!mask[y]) {
      mask[y] = true;
      queue.push_back(y);
    }
  };
  // Elements already present are closed under the first `closed` generators.
  for (auto e : members(mask))
    for (std::size_t i = closed; i < gens.size(); ++i) visit(g.multiply(e, gens[i]));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (auto s : gens) visit(g.multiply(x, s));
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  Subgroup s;
  s.mask_.assign(g.order(), false);
  s.mask_[g.identity()] = true;
  s.elements_ = {g.identity()};
  return s;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  Subgroup s;
  s.mask_.assign(g.order(), true);
  s.elements_.resize(g.order());
  for (Elem e = 0; e < g.order(); ++e) s.elements_[e] = e;
  s.generators_ = greedy_generators(g, g.generators(), g.order());
  return s;
}

Subgroup Subgroup::generated(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> mask(g.order(), false);
  mask[g.identity()] = true;
  for (auto x : gens)
    if (x >= g.order()) throw PreconditionError("generator outside the group");
  close_mask(g, mask, gens);
  Subgroup s;
  s.mask_ = std::move(mask);
  s.elements_ = members(s.mask_);
  s.generators_ = greedy_generators(g, std::vector<Elem>(gens.begin(), gens.end()), s.elements_.size());
  return s;
}

Subgroup Subgroup::from_closed_mask(const FiniteGroup& g, std::vector<bool> mask) {
  Subgroup s;
  s.mask_ = std::move(mask);
  s.elements_ = members(s.mask_);
  s.generators_ = greedy_generators(g, s.elements_, s.elements_.size());
  return s;
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<bool> mask(g.order(), false);
  for (auto e : elements) {
    if (e >= g.order()) throw PreconditionError("element outside the group");
    mask[e] = true;
  }
  if (!mask[g.identity()]) throw PreconditionError("element set lacks the identity");
  for (auto a : elements)
    for (auto b : elements)
      if (!mask[g.multiply(a, b)]) throw PreconditionError("element set is not closed");
  return from_closed_mask(g, std::move(mask));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (size() > other.size()) return false;
  for (auto e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::vector<bool> mask = a.mask();
  close_mask(g, mask, gens, a.generators().size());
  return Subgroup::from_closed_mask(g, std::move(mask));
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> mask(a.parent_order(), false);
  for (auto e : a.elements())
    if (b.contains(e)) mask[e] = true;
  return Subgroup::from_closed_mask(g, std::move(mask));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Elem by) {
  std::vector<bool> mask(g.order(), false);
  for (auto e : s.elements()) mask[g.conjugate(e, by)] = true;
  return Subgroup::from_closed_mask(g, std::move(mask));
}

Subgroup core_in(const FiniteGroup& g, const Subgroup& s, const Subgroup& h) {
  // Largest subset of S stable under conjugation by the generators of H.
  std::vector<bool> mask = s.mask();
  std::vector<Elem> live = s.elements();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Elem> next;
    for (auto x : live) {
      bool keep = true;
      for (auto y : h.generators()) {
        if (!mask[g.conjugate(x, y)] || !mask[g.conjugate(x, g.inverse(y))]) {
          keep = false;
          break;
        }
      }
      if (keep) next.push_back(x);
    }
    if (next.size() != live.size()) {
      changed = true;
      for (auto x : live) mask[x] = false;
      for (auto x : next) mask[x] = true;
      live = std::move(next);
    }
  }
  return Subgroup::from_closed_mask(g, std::move(mask));
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
  for (auto y : h.generators())
    for (auto x : n.generators())
      if (!n.contains(g.conjugate(x, y))) return false;
  return true;
}

std::size_t index_of(const Subgroup& sub, const Subgroup& super) {
  if (sub.size() == 0 || super.size() % sub.size() != 0) throw PreconditionError("not a subgroup");
  return super.size() / sub.size();
}

Subgroup search_subgroup(const FiniteGroup& g, const std::function<bool(Elem)>& test) {
  return search_subgroup(g, test, Subgroup::trivial(g));
}

Subgroup search_subgroup(const FiniteGroup& g, const std::function<bool(Elem)>& test, const Subgroup& known) {
  const auto n = g.order();
  std::vector<bool> in = known.mask();
  std::vector<bool> seen = known.mask();
  std::vector<Elem> gens = known.generators();
  std::vector<Elem> current = known.elements();
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    if (test(x)) {
      gens.push_back(x);
      close_mask(g, in, gens, gens.size() - 1);
      current.clear();
      for (Elem e = 0; e < n; ++e)
        if (in[e]) {
          seen[e] = true;
          current.push_back(e);
        }
    } else {
      for (auto s : current) seen[g.multiply(x, s)] = true;
    }
  }
  return Subgroup::from_closed_mask(g, std::move(in));
}

}  // namespace wordform
