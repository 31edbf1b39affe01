#include "wordform/group/quotient.hpp"

#include "wordform/error.hpp"

namespace wordform {

CosetTable quotient(const FiniteGroup& g, const Subgroup& a1, const Subgroup& a0) {
  if (!a0.is_subgroup_of(a1) || !is_normal_in(g, a0, a1)) throw PreconditionError("not a section");
  CosetTable q;
  q.coset_of.assign(g.order(), -1);
  for (auto x : a1.elements()) {
    if (q.coset_of[x] >= 0) continue;
    const auto id = static_cast<std::int32_t>(q.reps.size());
    q.reps.push_back(x);
    for (auto n : a0.elements()) q.coset_of[g.multiply(x, n)] = id;
  }
  const auto m = q.reps.size();
  q.table.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.table[a * m + b] = static_cast<std::uint32_t>(q.coset_of[g.multiply(q.reps[a], q.reps[b])]);
  return q;
}

namespace {

std::vector<std::uint32_t> orders(const CosetTable& q) {
  std::vector<std::uint32_t> out(q.order());
  for (std::uint32_t a = 0; a < q.order(); ++a) {
    std::uint32_t x = a, n = 1;
    while (x != 0) {
      x = q.mul(x, a);
      ++n;
    }
    out[a] = n;
  }
  return out;
}

std::vector<std::uint32_t> generators(const CosetTable& q) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> span(q.order(), false);
  span[0] = true;
  for (std::uint32_t a = 0; a < q.order(); ++a) {
    if (span[a]) continue;
    gens.push_back(a);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t e = 0; e < q.order(); ++e)
      if (span[e]) stack.push_back(e);
    while (!stack.empty()) {
      auto e = stack.back();
      stack.pop_back();
      for (auto s : gens) {
        auto f = q.mul(e, s);
        if (!span[f]) {
          span[f] = true;
          stack.push_back(f);
        }
      }
    }
  }
  return gens;
}

// Extends generator images to a homomorphism; empty result if that fails or is not bijective.
std::vector<std::uint32_t> extend(const CosetTable& x, const CosetTable& y, const std::vector<std::uint32_t>& gens,
                                  const std::vector<std::uint32_t>& images) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> phi(x.order(), unset);
  std::vector<bool> hit(y.order(), false);
  phi[0] = 0;
  hit[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto e = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto f = x.mul(e, gens[j]);
      auto v = y.mul(phi[e], images[j]);
      if (phi[f] == unset) {
        if (hit[v]) return {};
        phi[f] = v;
        hit[v] = true;
        queue.push_back(f);
      } else if (phi[f] != v) {
        return {};
      }
    }
  }
  for (std::uint32_t a = 0; a < x.order(); ++a)
    for (std::uint32_t b = 0; b < x.order(); ++b)
      if (phi[x.mul(a, b)] != y.mul(phi[a], phi[b])) return {};
  return phi;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> find_isomorphisms(const CosetTable& x, const CosetTable& y) {
  std::vector<std::vector<std::uint32_t>> out;
  if (x.order() != y.order()) return out;
  const auto ox = orders(x), oy = orders(y);
  {
    std::vector<std::uint32_t> cx(x.order() + 1, 0), cy(y.order() + 1, 0);
    for (auto o : ox) ++cx[o];
    for (auto o : oy) ++cy[o];
    if (cx != cy) return out;
  }
  const auto gens = generators(x);
  std::vector<std::uint32_t> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == gens.size()) {
      auto phi = extend(x, y, gens, images);
      if (!phi.empty()) out.push_back(std::move(phi));
      return;
    }
    for (std::uint32_t v = 0; v < y.order(); ++v) {
      if (oy[v] != ox[gens[j]]) continue;
      images[j] = v;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace wordform
