#include "wordform/group/goursat.hpp"

#include <algorithm>
#include <array>

#include "wordform/group/lattice.hpp"

namespace wordform {

namespace {

void require_square(const TupleGroup& g2) {
  if (g2.arity() != 2 || g2.constraint() != Constraint::full) throw PreconditionError("expected the full power G^2");
}

Elem pair_code(const TupleGroup& g2, Elem a, Elem b) {
  const std::array<Elem, 2> t{a, b};
  return g2.from_free(t);
}

}  // namespace

GoursatTriple goursat_decompose(const TupleGroup& g2, const Subgroup& k) {
  require_square(g2);
  const std::array<std::size_t, 1> first{0}, second{1};
  GoursatTriple t;
  t.a = projection(g2, k, first).subgroup;
  t.b = projection(g2, k, second).subgroup;
  t.m = restriction(g2, k, first).subgroup;
  t.n = restriction(g2, k, second).subgroup;
  const auto& base = g2.base();
  const auto qa = quotient(base, t.a, t.m);
  const auto qb = quotient(base, t.b, t.n);
  std::vector<Elem> image(qa.order(), 0);
  for (auto e : k.elements()) {
    auto tup = g2.tuple(e);
    image[qa.coset_of[tup[0]]] = qb.reps[qb.coset_of[tup[1]]];
  }
  for (std::size_t c = 0; c < qa.order(); ++c) t.theta.emplace_back(qa.reps[c], image[c]);
  return t;
}

Subgroup goursat_reconstruct(const TupleGroup& g2, const GoursatTriple& t) {
  require_square(g2);
  const auto& base = g2.base();
  const auto qa = quotient(base, t.a, t.m);
  const auto qb = quotient(base, t.b, t.n);
  if (t.theta.size() != qa.order()) throw PreconditionError("theta does not cover A/M");
  std::vector<std::int32_t> target(qa.order(), -1);
  for (auto [ra, rb] : t.theta) {
    if (qa.coset_of[ra] < 0 || qb.coset_of[rb] < 0) throw PreconditionError("theta leaves the sections");
    target[qa.coset_of[ra]] = qb.coset_of[rb];
  }
  std::vector<bool> mask(g2.order(), false);
  for (auto x : t.a.elements())
    for (auto y : t.b.elements())
      if (target[qa.coset_of[x]] == qb.coset_of[y]) mask[pair_code(g2, x, y)] = true;
  return Subgroup::from_elements(g2, [&] {
    std::vector<Elem> elems;
    for (Elem e = 0; e < mask.size(); ++e)
      if (mask[e]) elems.push_back(e);
    return elems;
  }());
}

std::vector<Subgroup> enumerate_product_subgroups(const TupleGroup& g2, const std::vector<Subgroup>& base_lattice,
                                                  const Ceilings& ceilings) {
  require_square(g2);
  if (g2.order() > ceilings.elements) throw CeilingExceeded("group order", ceilings.elements);
  const auto& base = g2.base();
  struct Section {
    const Subgroup* top;
    CosetTable q;
  };
  std::vector<Section> sections;
  for (const auto& top : base_lattice)
    for (const auto& bottom : normal_subgroups(base, top, base_lattice))
      sections.push_back({&top, quotient(base, top, bottom)});

  std::vector<Subgroup> out;
  for (const auto& x : sections) {
    for (const auto& y : sections) {
      if (x.q.order() != y.q.order()) continue;
      for (const auto& phi : find_isomorphisms(x.q, y.q)) {
        std::vector<bool> mask(g2.order(), false);
        for (auto a : x.top->elements())
          for (auto b : y.top->elements())
            if (phi[x.q.coset_of[a]] == static_cast<std::uint32_t>(y.q.coset_of[b])) mask[pair_code(g2, a, b)] = true;
        out.push_back(Subgroup::from_closed_mask(g2, std::move(mask)));
        if (out.size() > ceilings.subgroups) throw CeilingExceeded("subgroup count", ceilings.subgroups);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wordform
