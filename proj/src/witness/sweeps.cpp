#include "wordform/witness/sweeps.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "wordform/group/goursat.hpp"
#include "wordform/group/lattice.hpp"
#include "wordform/group/params.hpp"
#include "wordform/group/quotient.hpp"
#include "wordform/witness/membership.hpp"

namespace wordform {

std::vector<Subgroup> square_lattice(const TupleGroup& g2, const Ceilings& ceilings) {
  auto base = enumerate_subgroups(g2.base(), ceilings);
  return enumerate_product_subgroups(g2, base, ceilings);
}

LeftRightSetting LeftRightSetting::build(std::shared_ptr<const PermGroup> g, std::size_t k, const Ceilings& ceilings) {
  if (k < 2) throw PreconditionError("left-right setting needs k >= 2");
  auto base_lattice = enumerate_subgroups(*g, ceilings);
  if (g->is_abelian() || !is_simple(*g, Subgroup::whole(*g), base_lattice))
    throw PreconditionError("G must be nonabelian simple");
  LeftRightSetting s;
  s.g = g;
  s.k = k;
  s.n = min_faithful_degree(*g, Subgroup::whole(*g), base_lattice);
  s.action = WordAction::make(ActionKind::left_right, g, k, ceilings);
  s.omega = std::make_shared<WordDomain>(g, k, ceilings.elements);
  s.pullbacks = std::make_shared<PullbackTable>(*s.action, *s.omega);
  const auto& q = s.q();
  if (k == 2) {
    // (1, a, b, 1) in Q and (a, b) in G^2 share their code.
    auto g2 = TupleGroup::make(g, 2, Constraint::full, ceilings);
    for (Elem e = 0; e < q.order(); ++e) {
      std::array<Elem, 2> t{q.coordinate(e, 1), q.coordinate(e, 2)};
      if (*g2->encode(t) != e) throw PreconditionError("unexpected element coding");
    }
    for (const auto& h : enumerate_product_subgroups(*g2, base_lattice, ceilings))
      s.lattice.push_back(Subgroup::from_closed_mask(q, h.mask()));
  } else {
    s.lattice = enumerate_subgroups(q, ceilings);
  }
  for (const auto& h : s.lattice) s.edges.push_back(edge_set(q, h));
  return s;
}

namespace {

Subgroup meet_all(const FiniteGroup& q, std::span<const Subgroup> xs) {
  if (xs.empty()) return Subgroup::whole(q);
  Subgroup out = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) out = intersect(q, out, xs[i]);
  return out;
}

Json edges_json(const EdgeGraph& e) {
  Json j = Json::array();
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    if (e.edges[i]) j.push_back({i + 1, i + 2});
  return j;
}

Json subgroup_json(const TupleGroup& q, const Subgroup& s) {
  Json j;
  j["order"] = s.size();
  j["edges"] = edges_json(edge_set(q, s));
  Json gens = Json::array();
  for (auto x : s.generators()) gens.push_back(q.label(x));
  j["generators"] = gens;
  return j;
}

WitnessReport start(const std::string& lemma, const SweepMode& mode) {
  WitnessReport r;
  r.lemma = lemma;
  if (!mode.exhaustive) {
    r.mode = "sampled";
    r.budget = mode.budget;
    r.seed = mode.seed;
  }
  return r;
}

// Draws subgroups and realizes N and B members as stabilizers of explicit functions.
class Sampler {
 public:
  Sampler(const LeftRightSetting& s, std::uint64_t seed) : s_(s), rng_(seed) {
    for (std::size_t i = 0; i < s.lattice.size(); ++i)
      if (s.edges[i].edge_count() > 0) edged_.push_back(i);
  }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  const Subgroup& any() {
    if (!edged_.empty() && below(2) == 0) return s_.lattice[edged_[below(edged_.size())]];
    return s_.lattice[below(s_.lattice.size())];
  }

  Subgroup above(const Subgroup& x) {
    const auto extra = below(3);
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < extra; ++i) gens.push_back(static_cast<Elem>(below(s_.q().order())));
    return join(s_.q(), x, Subgroup::generated(s_.q(), gens));
  }

  // Stabilizer of the orbit labelling of S.
  Subgroup integer_stabilizer(const Subgroup& x) {
    auto ids = orbit_ids(*s_.pullbacks, x);
    return function_stabilizer(ids, *s_.pullbacks, x);
  }

  // Stabilizer of the indicator of one S-orbit.
  Subgroup boolean_stabilizer(const Subgroup& x) {
    auto ids = orbit_ids(*s_.pullbacks, x);
    const auto orbits = *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<bool> chosen(orbits, false);
    chosen[below(orbits)] = true;
    auto f = orbit_union(ids, chosen);
    return function_stabilizer(f, *s_.pullbacks, x);
  }

 private:
  const LeftRightSetting& s_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> edged_;
};

}  // namespace

bool intersection_hypotheses(const TupleGroup& q, std::span<const Subgroup> hs, std::span<const Subgroup> ls,
                             const Subgroup& h, const Subgroup& k) {
  if (hs.empty() || hs.size() != ls.size()) return false;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (!hs[i].is_subgroup_of(ls[i])) return false;
  return meet_all(q, hs) == h && meet_all(q, ls).is_subgroup_of(k);
}

bool intersection_instance(const TupleGroup& q, std::span<const Subgroup> hs, std::span<const Subgroup> ls,
                           const Subgroup& h, const Subgroup& k, Json* detail) {
  const bool k_is_q = k.size() == q.order();
  const auto ehk = edge_set(q, h).meet(edge_set(q, k));
  std::vector<EdgeGraph> eil;
  std::size_t best = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    eil.push_back(edge_set(q, hs[i]).meet(edge_set(q, ls[i])));
    best = std::max(best, mu_nonabelian(q, hs[i], ls[i]));
  }
  const auto target = k_is_q ? 0 : ehk.largest();
  bool components_ok = true;
  if (!k_is_q) {
    for (auto [a, b] : ehk.components()) {
      if (a == b) continue;
      bool found = false;
      for (const auto& e : eil) {
        bool inside = true;
        for (auto v = a; v < b; ++v) inside = inside && e.edges[v];
        found = found || inside;
      }
      components_ok = components_ok && found;
    }
  }
  const bool pass = components_ok && best >= target;
  if (detail) {
    Json j;
    j["H"] = subgroup_json(q, h);
    j["K"] = subgroup_json(q, k);
    j["mu_HK"] = target;
    j["max_mu_HiLi"] = best;
    Json parts = Json::array();
    for (std::size_t i = 0; i < hs.size(); ++i) parts.push_back({{"H_i", subgroup_json(q, hs[i])}, {"L_i", subgroup_json(q, ls[i])}});
    j["components"] = parts;
    *detail = std::move(j);
  }
  return pass;
}

bool shrinkage_hypotheses(const TupleGroup& q, const Subgroup& h, const Subgroup& u, const Subgroup& l,
                          const Subgroup& v) {
  return u.is_subgroup_of(v) && h.is_subgroup_of(l) && core_in(q, u, h).is_subgroup_of(h) &&
         core_in(q, v, h).is_subgroup_of(l);
}

bool shrinkage_instance(const TupleGroup& q, std::size_t n, const Subgroup& h, const Subgroup& u, const Subgroup& l,
                        const Subgroup& v, Json* detail) {
  const auto uh = intersect(q, u, h);
  const auto index = index_of(uh, h);
  std::size_t m = 1;
  for (std::uint64_t power = 1; power < index; power *= n) ++m;
  const auto mu_uv = mu_nonabelian(q, u, v);
  const auto mu_uhv = mu_nonabelian(q, uh, v);
  const auto mu_hl = mu_nonabelian(q, h, l);
  const bool pass = mu_uv >= mu_uhv && m * mu_uhv >= mu_hl;
  if (detail) {
    Json j;
    j["H"] = subgroup_json(q, h);
    j["U"] = subgroup_json(q, u);
    j["L"] = subgroup_json(q, l);
    j["V"] = subgroup_json(q, v);
    j["index_H_HcapU"] = index;
    j["m"] = m;
    j["mu_UV"] = mu_uv;
    j["mu_UcapH_V"] = mu_uhv;
    j["mu_HL"] = mu_hl;
    *detail = std::move(j);
  }
  return pass;
}

WitnessReport check_intersection_property(const LeftRightSetting& s, const SweepMode& mode) {
  if (mode.exhaustive) throw CeilingExceeded("exhaustive intersection sweep instance count", 0);
  auto r = start("intersection", mode);
  const auto& q = s.q();
  std::size_t best_target = 0;
  auto run = [&](std::span<const Subgroup> hs, std::span<const Subgroup> ls, const Subgroup& k) {
    const auto h = meet_all(q, hs);
    if (!intersection_hypotheses(q, hs, ls, h, k)) {
      ++r.excluded;
      return;
    }
    Json detail;
    const bool pass = intersection_instance(q, hs, ls, h, k, &detail);
    best_target = std::max<std::size_t>(best_target, detail["mu_HK"].get<std::size_t>());
    r.record(pass, detail);
  };

  Sampler sm(s, mode.seed);
  for (std::uint64_t t = 0; t < mode.budget; ++t) {
    const auto count = 1 + sm.below(3);
    std::vector<Subgroup> hs, ls;
    for (std::size_t i = 0; i < count; ++i) {
      hs.push_back(sm.any());
      ls.push_back(sm.integer_stabilizer(sm.above(hs.back())));
    }
    const auto k = sm.boolean_stabilizer(sm.above(meet_all(q, ls)));
    run(hs, ls, k);
  }
  r.extremal = {{"max_mu_HK", best_target}};
  return r;
}

WitnessReport check_shrinkage_property(const LeftRightSetting& s, const SweepMode& mode) {
  if (mode.exhaustive) throw CeilingExceeded("exhaustive shrinkage sweep instance count", 0);
  auto r = start("shrinkage", mode);
  const auto& q = s.q();
  std::size_t max_m = 0, max_mu = 0;
  auto run = [&](const Subgroup& h, const Subgroup& u, const Subgroup& l, const Subgroup& v) {
    if (!shrinkage_hypotheses(q, h, u, l, v)) {
      ++r.excluded;
      return;
    }
    Json detail;
    const bool pass = shrinkage_instance(q, s.n, h, u, l, v, &detail);
    max_m = std::max<std::size_t>(max_m, detail["m"].get<std::size_t>());
    max_mu = std::max<std::size_t>(max_mu, detail["mu_HL"].get<std::size_t>());
    r.record(pass, detail);
  };

  Sampler sm(s, mode.seed);
  for (std::uint64_t t = 0; t < mode.budget; ++t) {
    const auto& h = sm.any();
    Subgroup u = sm.any();
    if (sm.below(2) == 0) u = intersect(q, u, h);
    const auto v = sm.integer_stabilizer(sm.above(u));
    const auto l = sm.integer_stabilizer(sm.above(join(q, h, core_in(q, v, h))));
    run(h, u, l, v);
  }
  r.extremal = {{"max_m", max_m}, {"max_mu_HL", max_mu}};
  return r;
}

WitnessReport support_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice, std::size_t n) {
  WitnessReport r;
  r.lemma = "support";
  std::size_t tight = 0, largest = 0;
  for (const auto& h : lattice) {
    const auto index = g2.order() / h.size();
    // Least m with index < n^m; the lemma is weakest there.
    std::size_t m = 0;
    for (std::uint64_t power = 1; power <= index; power *= n) ++m;
    const auto support = minimal_support(g2, h).size();
    largest = std::max(largest, support);
    if (support == m) ++tight;
    Json d;
    if (support > m) d = {{"order", h.size()}, {"index", index}, {"m", m}, {"support", support}};
    r.record(support <= m, d);
  }
  r.extremal = {{"max_support", largest}, {"tight_instances", tight}};
  return r;
}

WitnessReport diag_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice) {
  WitnessReport r;
  r.lemma = "diag";
  const auto d = diagonal(g2);
  std::size_t above = 0;
  for (const auto& h : lattice) {
    if (!d.is_subgroup_of(h)) continue;
    ++above;
    const bool pass = h == d || h.size() == g2.order();
    Json detail;
    if (!pass) detail = {{"order", h.size()}};
    r.record(pass, detail);
  }
  r.extremal = {{"subgroups_containing_diag", above}};
  return r;
}

WitnessReport quotient_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice) {
  WitnessReport r;
  r.lemma = "quotient";
  const auto& base = g2.base();
  const auto target = quotient(base, Subgroup::whole(base), Subgroup::trivial(base));
  const auto whole = Subgroup::whole(g2);
  for (const auto& nsub : lattice) {
    if (nsub.size() * base.order() != g2.order() || !is_normal_in(g2, nsub, whole)) continue;
    if (find_isomorphisms(quotient(g2, whole, nsub), target).empty()) continue;
    std::size_t proper = 0;
    for (std::size_t j = 0; j < 2; ++j) {
      std::array<std::size_t, 1> c{j};
      if (restriction(g2, nsub, c).subgroup.size() < base.order()) ++proper;
    }
    Json detail;
    if (proper != 1) detail = {{"order", nsub.size()}, {"proper_coordinates", proper}};
    r.record(proper == 1, detail);
  }
  return r;
}

}  // namespace wordform
