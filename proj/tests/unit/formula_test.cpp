#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordform/error.hpp"
#include "wordform/formula/compiled.hpp"
#include "wordform/formula/domain.hpp"
#include "wordform/formula/sexpr.hpp"

using namespace wordform;

namespace {

Perm random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

std::vector<std::uint8_t> bits(std::size_t j, std::size_t m) {
  std::vector<std::uint8_t> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = (j >> i) & 1;
  return x;
}

}  // namespace

TEST_CASE("canonical form ignores child order") {
  const auto a = Formula::literal(0), b = Formula::literal(1, false), c = Formula::literal(2);
  const auto f = Formula::gate(Kind::and_gate, {a, Formula::gate(Kind::or_gate, {b, c})});
  const auto g = Formula::gate(Kind::and_gate, {Formula::gate(Kind::or_gate, {c, b}), a});
  CHECK(f == g);
  CHECK(f.bytes() == g.bytes());
  CHECK(f.hash() == g.hash());
  CHECK(f.size() == 3);
  CHECK(f.depth() == 2);
  CHECK(Formula::constant(true).size() == 0);
  CHECK_FALSE(f == Formula::gate(Kind::or_gate, {a, Formula::gate(Kind::or_gate, {b, c})}));
}

TEST_CASE("merged splices same-kind children") {
  const auto a = Formula::literal(0), b = Formula::literal(1), c = Formula::literal(2);
  const auto f = Formula::merged(Kind::and_gate, {a, Formula::gate(Kind::and_gate, {b, c})});
  CHECK(f.depth() == 1);
  CHECK(f.children().size() == 3);
}

TEST_CASE("s-expression round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_formula(rng, 6, 4);
    CHECK(parse_sexpr(to_sexpr(f)) == f);
  }
  CHECK(to_sexpr(parse_sexpr("(or !x:2 (and x:1 1))")) == to_sexpr(parse_sexpr("(or (and 1 x:1) !x:2)")));
  CHECK_THROWS_AS(parse_sexpr("(and x:1"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(xor x:1 x:2)"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("x:0"), ParseError);
}

TEST_CASE("majority is strict") {
  const auto f = parse_sexpr("(maj x:1 x:2 x:3 x:4)");
  const std::uint8_t two[] = {1, 1, 0, 0};
  const std::uint8_t three[] = {1, 1, 1, 0};
  CHECK_FALSE(evaluate(f, two));
  CHECK(evaluate(f, three));
  CHECK_THROWS_AS(negate(f), PreconditionError);
}

TEST_CASE("action on formulas pulls back assignments") {
  std::mt19937_64 rng(11);
  const std::size_t m = 6;
  for (int t = 0; t < 100; ++t) {
    const auto f = oracle::random_formula(rng, m, 3);
    const auto pi = random_perm(rng, m);
    const auto g = act(pi, f);
    CHECK(g.size() == f.size());
    for (std::size_t j = 0; j < (1u << m); j += 3) {
      const auto x = bits(j, m);
      std::vector<std::uint8_t> xp(m);
      for (std::size_t i = 0; i < m; ++i) xp[i] = x[pi(i)];
      CHECK(evaluate(g, x) == evaluate(f, xp));
    }
    const auto sigma = random_perm(rng, m);
    CHECK(act(pi * sigma, f) == act(pi, act(sigma, f)));
  }
}

TEST_CASE("negation and literal flips") {
  std::mt19937_64 rng(3);
  const std::size_t m = 5;
  for (int t = 0; t < 100; ++t) {
    const auto f = oracle::random_formula(rng, m, 3);
    const auto nf = negate(f);
    for (std::size_t j = 0; j < (1u << m); ++j) {
      const auto x = bits(j, m);
      CHECK(evaluate(nf, x) != evaluate(f, x));
    }
    if (f.size() > 0) {
      const auto k = rng() % f.size();
      const auto g = flip_literal(f, k);
      CHECK(g.size() == f.size());
      CHECK_FALSE(g == f);
      bool undone = false;
      for (std::uint64_t j = 0; j < g.size() && !undone; ++j) undone = flip_literal(g, j) == f;
      CHECK(undone);
    }
  }
  CHECK_THROWS_AS(flip_literal(Formula::literal(0), 1), PreconditionError);
}

TEST_CASE("compiled and parallel truth tables match reference evaluation") {
  std::mt19937_64 rng(17);
  const CubeDomain cube(9);
  for (int t = 0; t < 40; ++t) {
    const auto f = oracle::random_formula(rng, 9, 5);
    const auto serial = truth_table_serial(f, cube);
    CHECK(truth_table(f, cube) == serial);
    for (std::size_t j = 0; j < cube.size(); j += 37) {
      std::vector<std::uint8_t> x(9);
      cube.point(j, x);
      CHECK(serial[j] == evaluate(f, x));
    }
  }
}

TEST_CASE("domains") {
  const CubeDomain cube(4);
  std::vector<std::uint8_t> x(4);
  cube.point(6, x);
  CHECK(x == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(cube.find(x) == 6u);
  const auto pi = Perm::from_cycles(4, "(1 2 3 4)");
  const auto pb = cube.pullback(pi);
  for (std::size_t j = 0; j < cube.size(); ++j) {
    std::vector<std::uint8_t> y(4), z(4);
    cube.point(j, y);
    for (std::size_t i = 0; i < 4; ++i) z[i] = y[pi(i)];
    CHECK(cube.find(z) == pb[j]);
  }
  const ListDomain list(2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(list.pullback(Perm::from_cycles(2, "(1 2)")), PreconditionError);
}

TEST_CASE("distinct nodes counts shared subtrees once") {
  const auto a = Formula::literal(0), b = Formula::literal(1);
  const auto ab = Formula::gate(Kind::and_gate, {a, b});
  const auto f = Formula::gate(Kind::or_gate, {ab, Formula::gate(Kind::maj_gate, {ab, a, b})});
  CHECK(distinct_nodes(f) == 5);
  CHECK(f.size() == 6);
  CHECK(variable_bound(f) == 2);
}
