#pragma once
// Brute-force references shared by the unit tests. Deliberately naive.
#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wordform/formula/formula.hpp"
#include "wordform/group/finite_group.hpp"
#include "wordform/group/subgroup.hpp"

namespace oracle {

using wordform::Elem;
using wordform::FiniteGroup;

// Closure of a generating list by repeated products of all pairs until stable.
inline std::set<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{g.identity()};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(g.multiply(a, b)).second) grew = true;
  }
  return s;
}

// Every subgroup generated by at most `rank` elements.
inline std::set<std::set<Elem>> subgroups_of_rank(const FiniteGroup& g, int rank) {
  std::set<std::set<Elem>> out{{g.identity()}};
  std::set<std::set<Elem>> frontier = out;
  for (int r = 0; r < rank; ++r) {
    std::set<std::set<Elem>> next;
    for (const auto& s : frontier)
      for (Elem x = 0; x < g.order(); ++x) {
        if (s.count(x)) continue;
        std::vector<Elem> gens(s.begin(), s.end());
        gens.push_back(x);
        auto t = closure(g, gens);
        if (!out.count(t)) next.insert(t);
      }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

inline std::set<Elem> as_set(const wordform::Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

// Random formula over `vars` variables; MAJ only at odd arity.
inline wordform::Formula random_formula(std::mt19937_64& rng, std::uint32_t vars, int depth) {
  using wordform::Formula;
  using wordform::Kind;
  std::uniform_int_distribution<int> coin(0, 9);
  if (depth == 0 || coin(rng) < 2) {
    const int c = coin(rng);
    if (c == 0) return Formula::constant(coin(rng) < 5);
    return Formula::literal(static_cast<std::uint32_t>(rng() % vars), coin(rng) < 5);
  }
  const int pick = coin(rng) % 3;
  const Kind kind = pick == 0 ? Kind::and_gate : pick == 1 ? Kind::or_gate : Kind::maj_gate;
  std::size_t arity = 2 + rng() % 3;
  if (kind == Kind::maj_gate && arity % 2 == 0) ++arity;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < arity; ++i) kids.push_back(random_formula(rng, vars, depth - 1));
  return Formula::gate(kind, std::move(kids));
}

}  // namespace oracle
