#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordform/formula/compiled.hpp"
#include "wordform/formula/stabilizer.hpp"
#include "wordform/word/construct.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/verify.hpp"
#include "wordform/word/word.hpp"

using namespace wordform;

namespace {

// h_1(h_2(...h_k(uk))) == u0 by direct application.
bool word_oracle(const PermGroup& g, const std::vector<Elem>& t, std::uint32_t u0, std::uint32_t uk) {
  std::uint32_t x = uk;
  for (auto it = t.rbegin(); it != t.rend(); ++it) x = g.apply(*it, x);
  return x == u0;
}

std::vector<Elem> digits(std::size_t j, std::size_t base, std::size_t k) {
  std::vector<Elem> t(k);
  for (std::size_t i = 0; i < k; ++i, j /= base) t[i] = static_cast<Elem>(j % base);
  return t;
}

}  // namespace

TEST_CASE("word value: matrices, direct application and the domain agree") {
  const auto g = PermGroup::symmetric(3);
  const WordDomain omega(g, 3);
  REQUIRE(omega.size() == 216);
  const auto table = word_table(omega, 1, 2);
  for (std::size_t j = 0; j < omega.size(); ++j) {
    const auto t = digits(j, 6, 3);
    std::vector<Elem> got(3);
    omega.tuple(j, got);
    CHECK(got == t);
    CHECK(word_value(*g, t, 1, 2) == word_oracle(*g, t, 1, 2));
    CHECK(word_value_matrix(*g, t, 1, 2) == word_oracle(*g, t, 1, 2));
    CHECK(table[j] == word_oracle(*g, t, 1, 2));
    std::vector<std::uint8_t> x(omega.variables());
    omega.point(j, x);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) CHECK(x[var_index(3, i, a, b)] == (g->apply(t[i], b) == a));
    CHECK(omega.find(x) == j);
  }
}

TEST_CASE("size law and depth of the exact construction") {
  for (std::size_t n : {2, 3, 4})
    for (auto [k, d] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {4, 2}, {8, 3}, {9, 2}, {5, 1}}) {
      const auto f = build_exact({n, k, d, Polarity::sigma, 0, 0});
      CHECK(f.size() == predicted_size(n, k, d));
      if (k > 1) CHECK(f.depth() == d + 1);
    }
  CHECK_THROWS_AS(build_exact({2, 5, 2, Polarity::sigma, 0, 0}), PreconditionError);
  CHECK(exact_root(27, 3) == 3u);
  CHECK_FALSE(exact_root(26, 3).has_value());
  CHECK(ceil_root(26, 3) == 3);
  CHECK(ceil_root(28, 3) == 4);
}

TEST_CASE("constructions compute the word entry for both polarities and every entry") {
  const auto g = PermGroup::symmetric(3);
  for (auto [k, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {4, 2}, {3, 2}, {5, 2}})
    for (auto pol : {Polarity::sigma, Polarity::pi})
      for (std::uint32_t u0 = 0; u0 < 3; ++u0)
        for (std::uint32_t uk = 0; uk < 3; uk += 2) {
          const ConstructionParams p{3, k, d, pol, u0, uk};
          const auto f = exact_root(k, d) ? build_exact(p) : build_general(p);
          CHECK(f.depth() <= d + 1);
          CHECK(count_mismatches_serial(f, g, k, u0, uk) == 0);
          const auto v = verify_construction(f, g, k, u0, uk, std::nullopt, std::nullopt);
          CHECK(v.semantic_match);
          CHECK(v.invariant);
        }
}

TEST_CASE("general construction stays within the envelope") {
  for (std::size_t n : {2, 3})
    for (std::size_t k = 1; k <= 12; ++k)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto f = build_general({n, k, d, Polarity::sigma, 0, 0});
        CHECK(static_cast<long double>(f.size()) <= size_envelope(n, k, d));
        if (exact_root(k, d)) CHECK(f.size() == predicted_size(n, k, d));
      }
}

TEST_CASE("verification catches a flipped literal") {
  const auto g = PermGroup::symmetric(3);
  const auto f = build_exact({3, 4, 2, Polarity::sigma, 0, 0});
  for (std::uint64_t i = 0; i < f.size(); i += 5) {
    const auto v = verify_construction(flip_literal(f, i), g, 4, 0, 0, std::nullopt, std::nullopt);
    CHECK_FALSE(v.semantic_match);
  }
}

TEST_CASE("shifted-diagonal generators fix the construction and match the tuple action") {
  const auto g = PermGroup::symmetric(3);
  const std::size_t k = 3;
  const auto gens = shifted_diagonal_generators(*g, k);
  const auto f = build_exact({3, k, 1, Polarity::sigma, 0, 0});
  CHECK(is_invariant(f, gens));
  const auto action = WordAction::make(ActionKind::shifted_diagonal, g, k);
  CHECK(action->group().order() == 36);
  for (Elem q = 0; q < action->group().order(); ++q) CHECK(act(action->perm(q), f) == f);
  // perm(q) is a homomorphism
  for (Elem a = 0; a < 36; a += 5)
    for (Elem b = 0; b < 36; b += 7)
      CHECK(action->perm(action->group().multiply(a, b)) == action->perm(a) * action->perm(b));
}

TEST_CASE("block action sends h_i to sigma_i^-1 h_i tau_i") {
  const auto g = PermGroup::symmetric(3);
  const std::size_t k = 2;
  const auto action = WordAction::make(ActionKind::left_right, g, k);
  const WordDomain omega(g, k);
  std::vector<Elem> sigma, tau;
  for (Elem q = 0; q < action->group().order(); q += 3) {
    action->blocks(q, sigma, tau);
    const auto pb = omega.pullback(action->perm(q));
    for (std::size_t j = 0; j < omega.size(); j += 4) {
      std::vector<Elem> t(k), u(k);
      omega.tuple(j, t);
      omega.tuple(pb[j], u);
      for (std::size_t i = 0; i < k; ++i)
        CHECK(g->element(u[i]) == g->element(sigma[i]).inverse() * g->element(t[i]) * g->element(tau[i]));
    }
  }
}

TEST_CASE("stabilizers: fast paths match serial references and brute force") {
  const auto g = PermGroup::symmetric(3);
  std::mt19937_64 rng(23);
  for (auto kind : {ActionKind::shifted_diagonal, ActionKind::left_right, ActionKind::left_only}) {
    const std::size_t k = 2;
    const auto action = WordAction::make(kind, g, k);
    const WordDomain omega(g, k);
    std::vector<Formula> fs{build_exact({3, 2, 1, Polarity::sigma, 0, 0}),
                            build_exact({3, 2, 1, Polarity::pi, 1, 2})};
    for (int t = 0; t < 4; ++t) fs.push_back(oracle::random_formula(rng, static_cast<std::uint32_t>(action->variables()), 3));
    for (const auto& f : fs) {
      const auto syn = syntactic_stabilizer(f, *action);
      CHECK(syn == syntactic_stabilizer_serial(f, *action));
      const auto sem = semantic_stabilizer(f, *action, omega);
      CHECK(sem == semantic_stabilizer_serial(f, *action, omega));
      CHECK(syn.is_subgroup_of(sem));
      std::set<Elem> brute;
      const auto values = truth_table_serial(f, omega);
      for (Elem q = 0; q < action->group().order(); ++q) {
        const auto pb = omega.pullback(action->perm(q));
        bool fixed = true;
        for (std::size_t j = 0; j < omega.size() && fixed; ++j) fixed = values[pb[j]] == values[j];
        if (fixed) brute.insert(q);
      }
      CHECK(oracle::as_set(sem) == brute);
      const PullbackTable table(*action, omega);
      std::vector<std::uint32_t> wide(values.begin(), values.end());
      CHECK(function_stabilizer(wide, table, Subgroup::trivial(action->group())) == sem);
    }
  }
}

TEST_CASE("orbit ids partition the domain into orbits") {
  const auto g = PermGroup::symmetric(3);
  const auto action = WordAction::make(ActionKind::left_only, g, 2);
  const WordDomain omega(g, 2);
  const PullbackTable table(*action, omega);
  const auto whole = Subgroup::whole(action->group());
  const auto ids = orbit_ids(table, whole);
  for (auto id : ids) CHECK(id == 0);  // left multiplication is transitive
  const auto triv = orbit_ids(table, Subgroup::trivial(action->group()));
  CHECK(std::set<std::uint32_t>(triv.begin(), triv.end()).size() == omega.size());
}
