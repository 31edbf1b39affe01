#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wordform/fp/subspace.hpp"
#include "wordform/fp/sweeps.hpp"
#include "wordform/fp/witness.hpp"
#include "wordform/fp/zq.hpp"
#include "wordform/group/lattice.hpp"

using namespace wordform;

namespace {

std::vector<FpVec> all_vectors(std::uint32_t p, std::size_t k) {
  std::vector<FpVec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(fp_decode(c, p, k));
  return out;
}

// V^⊥ by testing every vector against the basis.
std::set<FpVec> perp_oracle(const Subspace& v) {
  std::set<FpVec> out;
  for (const auto& x : all_vectors(v.p(), v.k())) {
    bool ok = true;
    for (const auto& b : v.basis()) ok = ok && dot(x, b, v.p()) == 0;
    if (ok) out.insert(x);
  }
  return out;
}

// max over covers W of min weight in V^⊥ \ W^⊥, with covers found as V + <x>.
std::size_t mu_oracle(const Subspace& v) {
  std::size_t best = 0;
  const auto pv = perp_oracle(v);
  for (const auto& x : all_vectors(v.p(), v.k())) {
    if (v.contains(x)) continue;
    const auto pw = perp_oracle(v.plus(x));
    std::size_t low = SIZE_MAX;
    for (const auto& y : pv)
      if (!pw.count(y)) low = std::min(low, weight(y));
    best = std::max(best, low);
  }
  return best;
}

std::size_t gaussian_binomial_total(std::uint32_t p, std::size_t k) {
  // Number of subspaces of F_p^k by the q-binomial recursion.
  std::vector<std::vector<std::size_t>> c(k + 1, std::vector<std::size_t>(k + 1, 0));
  for (std::size_t n = 0; n <= k; ++n) {
    c[n][0] = c[n][n] = 1;
    std::size_t pk = 1;
    for (std::size_t r = 1; r < n; ++r) {
      pk *= p;
      c[n][r] = c[n - 1][r - 1] + pk * c[n - 1][r];
    }
  }
  std::size_t total = 0;
  for (std::size_t r = 0; r <= k; ++r) total += c[k][r];
  return total;
}

}  // namespace

TEST_CASE("codes are lexicographic") {
  CHECK(fp_code(std::vector<std::uint32_t>{1, 0, 2}, 3) == 11);
  CHECK(fp_decode(11, 3, 3) == FpVec{1, 0, 2});
  CHECK(weight(std::vector<std::uint32_t>{0, 2, 1, 0}) == 2);
  CHECK(support(std::vector<std::uint32_t>{0, 2, 1, 0}) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("subspace counts match the q-binomial totals") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 3}, {2, 4}, {3, 3}, {5, 2}})
    CHECK(enumerate_subspaces(p, k).size() == gaussian_binomial_total(p, k));
  CHECK(enumerate_subspaces(2, 4).size() == 67);
}

TEST_CASE("perp, meet and sum against brute force") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}}) {
    const auto spaces = enumerate_subspaces(p, k);
    for (std::size_t i = 0; i < spaces.size(); i += 2) {
      const auto& v = spaces[i];
      const auto pv = v.perp();
      const auto members = pv.members();
      CHECK(std::set<FpVec>(members.begin(), members.end()) == perp_oracle(v));
      CHECK(pv.perp() == v);
      CHECK(v.dim() + pv.dim() == k);
      for (std::size_t j = 0; j < spaces.size(); j += 5) {
        const auto& w = spaces[j];
        std::set<FpVec> both;
        for (const auto& x : v.members())
          if (w.contains(x)) both.insert(x);
        const auto m = v.meet(w).members();
        CHECK(std::set<FpVec>(m.begin(), m.end()) == both);
        CHECK(v.plus(w).dim() + v.meet(w).dim() == v.dim() + w.dim());
      }
    }
  }
  CHECK_THROWS_AS(Subspace::span(4, 2, {}), PreconditionError);
}

TEST_CASE("min weight gap and mu against brute force") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}}) {
    for (const auto& v : enumerate_subspaces(p, k)) {
      CHECK(mu_p(v) == mu_oracle(v));
      for (const auto& w : covers(v)) {
        const auto gap = min_weight_gap(v, w);
        CHECK(perp_oracle(v).count(gap.witness) == 1);
        CHECK_FALSE(perp_oracle(w).count(gap.witness));
        CHECK(weight(gap.witness) == gap.weight);
      }
    }
  }
  CHECK_THROWS_AS(min_weight_gap(Subspace::zero(2, 3), Subspace::full(2, 3)), PreconditionError);
}

TEST_CASE("zero-sum subspace has mu equal to k") {
  for (std::size_t k = 2; k <= 6; ++k) {
    std::vector<FpVec> rows;
    for (std::size_t i = 1; i < k; ++i) {
      FpVec v(k, 0);
      v[0] = 1;
      v[i] = 1;
      rows.push_back(v);
    }
    CHECK(mu_p(Subspace::span(2, k, rows)) == k);
  }
}

TEST_CASE("shrinkage search finds T with H + T = W") {
  const auto spaces = enumerate_subspaces(2, 4);
  std::size_t checked = 0;
  for (const auto& h : spaces)
    for (const auto& w : covers(h))
      for (const auto& u : spaces) {
        if (!u.is_subspace_of(h) || u == h) continue;
        const auto r = shrinkage_T_search(h, w, u);
        REQUIRE(r.found);
        CHECK(r.t->dim() == u.dim() + 1);
        CHECK(u.is_subspace_of(*r.t));
        CHECK(h.plus(*r.t) == w);
        CHECK(r.gap_ut * r.m >= r.gap_hw);
        ++checked;
      }
  CHECK(checked > 0);
}

TEST_CASE("exhaustive fp sweeps report no counterexamples") {
  SweepMode all;
  CHECK(check_intersection_fp(2, 3, all).ok());
  CHECK(check_intersection_fp(3, 2, all).ok());
  CHECK(check_shrinkage_fp(2, 4, all).ok());
  CHECK(perp_uniqueness_check(3, 3, all).ok());
  CHECK(check_dim_bound(4, 2).ok());
  CHECK(check_dim_bound(9, 2).ok());
  CHECK(literal_mu_check(3, 3).ok());
  CHECK(literal_mu_check(4, 2).ok());
  SweepMode sampled{false, 300, 4};
  const auto s = check_intersection_fp(2, 4, sampled);
  CHECK(s.ok());
  CHECK(s.instances == 300);
  CHECK(check_intersection_fp(2, 4, sampled).instances == s.instances);
}

TEST_CASE("Z/qZ power: V_H and the dim bound by brute force") {
  const ZqGroup g(4, 2);
  CHECK(g.order() == 16);
  const auto lattice = enumerate_subgroups(g);
  for (const auto& h : lattice) {
    const auto v = vh_extract(g, h);
    std::set<FpVec> expect;
    for (auto e : h.elements()) {
      const auto d = g.digits(e);
      bool even = true;
      for (auto x : d) even = even && x % 2 == 0;
      if (even) {
        FpVec r;
        for (auto x : d) r.push_back(x / 2);
        expect.insert(r);
      }
    }
    const auto m = v.members();
    CHECK(std::set<FpVec>(m.begin(), m.end()) == expect);
  }
  CHECK(prime_power_of(8).p == 2);
  CHECK(prime_power_of(8).t == 3);
  CHECK_THROWS_AS(prime_power_of(6), PreconditionError);
}

TEST_CASE("prime power bound value") {
  CHECK(prime_power_bound_value(4, 2, 2, 1, 1) == doctest::Approx(4.0 * 2 / 2));
  CHECK(prime_power_bound_value(9, 3, 1, 2, 1) == doctest::Approx(1.0));
}
