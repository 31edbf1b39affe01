#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wordform/formula/domain.hpp"
#include "wordform/group/lattice.hpp"
#include "wordform/witness/beta.hpp"
#include "wordform/witness/edge_graph.hpp"
#include "wordform/witness/framework.hpp"
#include "wordform/witness/membership.hpp"
#include "wordform/witness/sweeps.hpp"
#include "wordform/word/construct.hpp"

using namespace wordform;

namespace {

std::shared_ptr<const PermGroup> a5() {
  return PermGroup::generate(5, {Perm::from_cycles(5, "(1 2 3)"), Perm::from_cycles(5, "(1 2 3 4 5)")});
}

const LeftRightSetting& a5_setting() {
  static const LeftRightSetting s = LeftRightSetting::build(a5(), 2);
  return s;
}

// Edges by restriction to the coordinate pair and comparison with the diagonal.
EdgeGraph edges_oracle(const TupleGroup& q, const Subgroup& h) {
  EdgeGraph e;
  e.k = q.arity() / 2;
  for (std::size_t i = 0; i + 1 < e.k; ++i) {
    const std::size_t coords[] = {2 * i + 1, 2 * i + 2};
    std::set<std::pair<Elem, Elem>> r;
    for (auto x : h.elements()) {
      const auto t = q.tuple(x);
      bool outside_trivial = true;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != coords[0] && j != coords[1]) outside_trivial = outside_trivial && t[j] == q.base().identity();
      if (outside_trivial) r.insert({t[coords[0]], t[coords[1]]});
    }
    bool is_diag = r.size() == q.base().order();
    for (auto [a, b] : r) is_diag = is_diag && a == b;
    e.edges.push_back(is_diag);
  }
  return e;
}

}  // namespace

TEST_CASE("edge graph components") {
  EdgeGraph g{6, {true, true, false, false, true}};
  const std::vector<std::pair<std::size_t, std::size_t>> comps{{0, 2}, {3, 3}, {4, 5}};
  CHECK(g.components() == comps);
  CHECK(g.largest() == 3);
  CHECK(g.edge_count() == 3);
  EdgeGraph h{6, {false, true, false, true, true}};
  CHECK(g.meet(h).edges == std::vector<bool>{false, true, false, false, true});
  CHECK(g.meet(h).subset_of(g));
  CHECK_FALSE(g.subset_of(h));
  CHECK(EdgeGraph{1, {}}.largest() == 1);
}

TEST_CASE("edge sets match restrictions for S3 and A5") {
  const auto s3 = PermGroup::symmetric(3);
  const auto q = TupleGroup::make(s3, 6, Constraint::q_left_right);
  // Diagonal generators on each edge, mixed with random elements.
  std::vector<std::vector<Elem>> diag_gens(2);
  for (std::size_t e = 0; e < 2; ++e)
    for (auto g : s3->generators()) {
      std::vector<Elem> t(6, s3->identity());
      t[2 * e + 1] = t[2 * e + 2] = g;
      diag_gens[e].push_back(*q->encode(t));
    }
  std::mt19937_64 rng(29);
  std::size_t with_edge = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Elem> gens;
    for (std::size_t e = 0; e < 2; ++e)
      if (rng() % 2) gens.insert(gens.end(), diag_gens[e].begin(), diag_gens[e].end());
    for (std::size_t r = rng() % 3; r > 0; --r) gens.push_back(static_cast<Elem>(rng() % q->order()));
    const auto h = Subgroup::generated(*q, gens);
    const auto e = edge_set(*q, h);
    CHECK(e.edges == edges_oracle(*q, h).edges);
    with_edge += e.edge_count() > 0;
  }
  CHECK(with_edge > 0);
  const auto& s = a5_setting();
  for (std::size_t i = 0; i < s.lattice.size(); i += 97) CHECK(s.edges[i].edges == edges_oracle(s.q(), s.lattice[i]).edges);
}

TEST_CASE("mu on the shifted diagonal ambient is k") {
  const auto s3 = PermGroup::symmetric(3);
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto q = TupleGroup::make(s3, 2 * k, Constraint::shifted_diagonal);
    const auto whole = Subgroup::whole(*q);
    CHECK(mu_nonabelian(*q, whole, whole, false) == k);
    CHECK(mu_nonabelian(*q, whole, whole, true) == 0);
  }
  const auto q = TupleGroup::make(s3, 4, Constraint::q_left_right);
  CHECK(mu_nonabelian(*q, Subgroup::whole(*q), Subgroup::whole(*q)) == 0);
  CHECK(mu_nonabelian(*q, Subgroup::trivial(*q), Subgroup::trivial(*q)) == 1);
}

TEST_CASE("membership in N and B") {
  const auto s3 = PermGroup::symmetric(3);
  std::vector<Perm> table(s3->elements().begin(), s3->elements().end());
  const TableAction action(*s3, table);
  const CubeDomain cube(3);
  const PullbackTable pb(action, cube);
  const auto lattice = enumerate_subgroups(*s3);
  for (const auto& s : lattice) {
    // Brute force: S is in N iff S equals the stabilizer of its orbit partition.
    const auto ids = orbit_ids(pb, s);
    std::set<Elem> fix;
    for (Elem q = 0; q < s3->order(); ++q) {
      bool ok = true;
      for (std::size_t j = 0; j < cube.size(); ++j) ok = ok && ids[pb(q)[j]] == ids[j];
      if (ok) fix.insert(q);
    }
    CHECK(in_N(pb, s) == (fix == oracle::as_set(s)));
    if (s.size() == 3) {
      CHECK_FALSE(in_N(pb, s));
      CHECK(in_B(pb, s) == Verdict::no);
    }
  }
  CHECK(in_N(pb, Subgroup::whole(*s3)));
  CHECK(in_B(pb, Subgroup::whole(*s3)) == Verdict::yes);
  CHECK(in_N(pb, Subgroup::trivial(*s3)));
  std::vector<std::uint32_t> witness;
  CHECK(in_B(pb, lattice[1], 16, &witness) == Verdict::yes);
  CHECK(function_stabilizer(witness, pb, Subgroup::trivial(*s3)) == lattice[1]);
  CHECK(to_string(Verdict::unknown) == "unknown");
}

TEST_CASE("intersection lemma instances") {
  const auto& s = a5_setting();
  const auto& q = s.q();
  std::size_t tested = 0;
  for (std::size_t i = 0; i < s.lattice.size(); i += 211)
    for (std::size_t j = i; j < s.lattice.size(); j += 157) {
      const auto& h = s.lattice[i];
      const auto& k = s.lattice[j];
      if (!h.is_subgroup_of(k)) continue;
      const Subgroup hs[] = {h};
      const Subgroup ls[] = {k};
      CHECK(intersection_hypotheses(q, hs, ls, h, k));
      CHECK(intersection_instance(q, hs, ls, h, k));
      ++tested;
    }
  CHECK(tested > 10);
  SweepMode sampled{false, 200, 3};
  const auto r = check_intersection_property(s, sampled);
  CHECK(r.ok());
  CHECK(r.instances == 200);
  CHECK_THROWS_AS(check_intersection_property(s, SweepMode{}), CeilingExceeded);
}

TEST_CASE("shrinkage lemma instances") {
  const auto& s = a5_setting();
  const auto& q = s.q();
  const auto whole = Subgroup::whole(q);
  std::size_t index_n = 0;
  for (std::size_t i = 0; i < s.lattice.size(); i += 53) {
    const auto& h = s.lattice[i];
    Json detail;
    CHECK(shrinkage_instance(q, s.n, h, h, whole, whole, &detail));
    CHECK(detail["m"] == 1);
    for (std::size_t j = 0; j < s.lattice.size(); j += 41) {
      const auto& u = s.lattice[j];
      if (index_of(intersect(q, u, h), h) != s.n) continue;
      shrinkage_instance(q, s.n, h, u, whole, whole, &detail);
      CHECK(detail["m"] == 2);
      ++index_n;
    }
  }
  CHECK(index_n > 0);
  SweepMode sampled{false, 200, 5};
  const auto r = check_shrinkage_property(s, sampled);
  CHECK(r.ok());
  CHECK(r.instances + r.excluded == 200);
}

TEST_CASE("A5 square: support, diagonal and quotient sweeps") {
  const auto& s = a5_setting();
  CHECK(s.lattice.size() == 8381);
  CHECK(s.n == 5);
  const auto g2 = TupleGroup::make(s.g, 2, Constraint::full);
  const auto lattice = square_lattice(*g2);
  CHECK(lattice.size() == 8381);
  CHECK(support_sweep(*g2, lattice, 5).ok());
  const auto d = diag_sweep(*g2, lattice);
  CHECK(d.ok());
  CHECK(d.instances == 2);
  CHECK(quotient_sweep(*g2, lattice).ok());
  CHECK(is_diagonal(*g2, diagonal(*g2)));
}

TEST_CASE("mu bound values") {
  CHECK(mu_bound(2, 4, 2) == doctest::Approx(4.0));
  CHECK(mu_bound(3, 3, 1) == doctest::Approx(9.0));
  CHECK(mu_bound(5, 0, 1) == 0);
  CHECK(mu_bound(2, 2, 2) == doctest::Approx(std::pow(2.0, 2 * (std::sqrt(2.0) - 1))));
}

TEST_CASE("framework lower bound against constructions") {
  for (std::size_t p : {2, 3}) {
    const auto g = PermGroup::cyclic(p);
    for (auto [k, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {4, 2}, {3, 1}}) {
      const auto f = build_exact({p, k, d, Polarity::sigma, 0, 0});
      const auto action = WordAction::make(ActionKind::abelian_lift, g, k);
      const WordDomain omega(g, k);
      const auto r = framework_check(f, *action, omega, d);
      CHECK(r.pass);
      CHECK(r.mu == k);
      CHECK(r.c == p);
      CHECK(static_cast<long double>(r.size) >= r.bound);
    }
  }
  const auto& s = a5_setting();
  const auto f = build_exact({5, 2, 1, Polarity::sigma, 0, 0});
  const auto r = framework_check(f, *s.action, *s.omega, 1);
  CHECK(r.size == 10);
  CHECK(r.mu == 2);
  CHECK(r.c == 5);
  CHECK(r.bound == doctest::Approx(5.0));
  CHECK(r.pass);
  const auto lo = WordAction::make(ActionKind::left_only, PermGroup::cyclic(2), 2);
  CHECK_THROWS_AS(mu_model(*lo), PreconditionError);
}

TEST_CASE("beta intervals for C2 with k = 2") {
  const auto g = PermGroup::cyclic(2);
  const auto action = WordAction::make(ActionKind::abelian_lift, g, 2);
  const WordDomain omega(g, 2);
  BetaSearch search(*action, omega, mu_model(*action));
  const auto& lattice = search.lattice();
  REQUIRE(lattice.size() == 5);
  for (const auto& s : lattice) {
    CHECK(search.in_n(s));
    CHECK(search.in_b(s));
  }
  const auto word = function_stabilizer(word_table(omega, 0, 0), *action, omega);
  CHECK(word.size() == 2);
  const auto whole = Subgroup::whole(action->group());
  CHECK(search.beta0(whole) == 0);
  CHECK(search.beta0(word) == beta_infinity);
  std::size_t literal = 0;
  for (const auto& s : lattice)
    if (search.beta0(s) == 1) ++literal;
  CHECK(literal == 2);

  const auto b0 = search.query(0, word, word);
  CHECK(b0.hi == beta_infinity);
  const auto b1 = search.query(1, word, word);
  CHECK(b1.lo == doctest::Approx(2.0));
  CHECK(b1.hi == beta_infinity);
  const auto b2 = search.query(2, word, word);
  CHECK(static_cast<double>(b2.lo) == doctest::Approx(std::pow(2.0, 2 * (std::sqrt(2.0) - 1))));
  CHECK(static_cast<double>(b2.hi) == doctest::Approx(2.0));
  const auto b3 = search.query(3, word, word);
  CHECK(b3.lo <= b3.hi);
  CHECK(b3.hi <= b2.hi);
  const auto top = search.query(2, word, whole);
  CHECK(top.identity);
  CHECK(top.hi == 0);
  CHECK_THROWS_AS(search.query(1, whole, word), PreconditionError);
}
