#include "wordform/fp/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wordform/fp/witness.hpp"
#include "wordform/fp/zq.hpp"
#include "wordform/group/lattice.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/word.hpp"

namespace wordform {

FpLattice FpLattice::build(std::uint32_t p, std::size_t k, std::size_t limit) {
  FpLattice L;
  L.p = p;
  L.k = k;
  L.spaces = enumerate_subspaces(p, k, limit);
  for (std::size_t i = 0; i < L.spaces.size(); ++i) L.index.emplace(L.spaces[i].key(), i);
  for (const auto& s : L.spaces) {
    std::vector<std::uint64_t> c;
    for (const auto& v : s.members()) c.push_back(fp_code(v, p));
    L.codes.push_back(std::move(c));
    L.perp.push_back(L.index.at(s.perp().key()));
  }
  L.covers.resize(L.spaces.size());
  for (std::size_t a = 0; a < L.spaces.size(); ++a)
    for (std::size_t b = 0; b < L.spaces.size(); ++b)
      if (L.spaces[b].dim() == L.spaces[a].dim() + 1 && L.below(a, b)) L.covers[a].push_back(b);
  L.mu.resize(L.spaces.size());
  for (std::size_t a = 0; a < L.spaces.size(); ++a) {
    std::size_t best = 0;
    for (auto b : L.covers[a]) best = std::max(best, L.gap(a, b).first);
    L.mu[a] = best;
  }
  return L;
}

bool FpLattice::contains(std::size_t s, std::uint64_t code) const {
  return std::binary_search(codes[s].begin(), codes[s].end(), code);
}

bool FpLattice::below(std::size_t a, std::size_t b) const {
  for (const auto& r : spaces[a].basis())
    if (!contains(b, fp_code(r, p))) return false;
  return true;
}

std::pair<std::size_t, std::uint64_t> FpLattice::gap(std::size_t v, std::size_t w) const {
  std::size_t best = k + 1;
  std::uint64_t arg = 0;
  for (auto c : codes[perp[v]]) {
    if (contains(perp[w], c)) continue;
    const auto wt = weight(fp_decode(c, p, k));
    if (wt < best) {
      best = wt;
      arg = c;
    }
  }
  return {best, arg};
}

namespace {

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

Json space_json(const Subspace& s) { return s.to_string(); }

}  // namespace

WitnessReport check_intersection_fp(std::uint32_t p, std::size_t k, const SweepMode& mode) {
  const auto L = FpLattice::build(p, k);
  auto r = start("fp-intersection", mode);
  const std::size_t n = L.spaces.size();
  std::size_t equal_cases = 0;
  auto visit = [&](std::size_t a, std::size_t b) {
    const auto h = L.find(L.spaces[a].meet(L.spaces[b]));
    const bool pass = std::max(L.mu[a], L.mu[b]) >= L.mu[h];
    if (pass && std::max(L.mu[a], L.mu[b]) == L.mu[h]) ++equal_cases;
    r.record(pass, Json{{"H1", space_json(L.spaces[a])},
                        {"H2", space_json(L.spaces[b])},
                        {"H", space_json(L.spaces[h])},
                        {"mu_H1", L.mu[a]},
                        {"mu_H2", L.mu[b]},
                        {"mu_H", L.mu[h]}});
  };
  if (mode.exhaustive) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) visit(a, b);
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t i = 0; i < mode.budget; ++i) {
      const auto a = pick(rng);
      visit(a, pick(rng));
    }
  }
  r.extremal["subspaces"] = n;
  r.extremal["equality_cases"] = equal_cases;
  return r;
}

WitnessReport check_shrinkage_fp(std::uint32_t p, std::size_t k, const SweepMode& mode) {
  const auto L = FpLattice::build(p, k);
  auto r = start("fp-shrinkage", mode);
  struct Triple {
    std::size_t h, w, u;
  };
  std::vector<Triple> all;
  for (std::size_t h = 0; h < L.spaces.size(); ++h)
    for (auto w : L.covers[h])
      for (std::size_t u = 0; u < L.spaces.size(); ++u)
        if (L.spaces[u].dim() <= L.spaces[h].dim() && L.below(u, h)) all.push_back({h, w, u});
  std::vector<Triple> chosen;
  if (mode.exhaustive) {
    chosen = all;
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::uint64_t i = 0; i < mode.budget; ++i) chosen.push_back(all[pick(rng)]);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  double min_ratio = 1e300;
  for (const auto& [h, w, u] : chosen) {
    const auto gap_hw = L.gap(h, w).first;
    const std::size_t m = L.spaces[h].dim() - L.spaces[u].dim() + 1;
    std::size_t best = 0;
    std::optional<std::size_t> best_t;
    for (auto c : L.codes[w]) {
      if (L.contains(h, c)) continue;
      const auto t = L.find(L.spaces[u].plus(fp_decode(c, p, k)));
      auto key = std::make_pair(u, t);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, L.gap(u, t).first).first;
      if (!best_t || it->second > best) {
        best = it->second;
        best_t = t;
      }
    }
    const bool pass = best_t && best * m >= gap_hw && L.find(L.spaces[h].plus(L.spaces[*best_t])) == w;
    if (pass) min_ratio = std::min(min_ratio, static_cast<double>(best * m) / static_cast<double>(gap_hw));
    r.record(pass, Json{{"H", space_json(L.spaces[h])},
                        {"W", space_json(L.spaces[w])},
                        {"U", space_json(L.spaces[u])},
                        {"gap_HW", gap_hw},
                        {"m", m},
                        {"best_gap_UT", best}});
  }
  r.extremal["triples_available"] = all.size();
  r.extremal["min_ratio_gapUT_times_m_over_gapHW"] = r.passes ? min_ratio : 0.0;
  return r;
}

WitnessReport perp_uniqueness_check(std::uint32_t p, std::size_t k, const SweepMode& mode) {
  const auto L = FpLattice::build(p, k);
  auto r = start("perp-uniqueness", mode);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < L.spaces.size(); ++v)
    for (auto w : L.covers[v]) pairs.emplace_back(v, w);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (mode.exhaustive) {
    chosen = pairs;
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (std::uint64_t i = 0; i < mode.budget; ++i) chosen.push_back(pairs[pick(rng)]);
  }
  std::size_t witnesses = 0;
  for (const auto& [v, w] : chosen) {
    const auto min_w = L.gap(v, w).first;
    const auto& vperp = L.codes[L.perp[v]];
    bool pass = true;
    Json bad;
    for (auto c : vperp) {
      if (L.contains(L.perp[w], c)) continue;
      const auto x = fp_decode(c, p, k);
      if (weight(x) != min_w) continue;
      ++witnesses;
      const auto sx = support(x);
      const auto line = Subspace::span(p, k, {x});
      for (auto cy : vperp) {
        const auto y = fp_decode(cy, p, k);
        const auto sy = support(y);
        if (line.contains(y) || !std::includes(sx.begin(), sx.end(), sy.begin(), sy.end())) continue;
        pass = false;
        bad = Json{{"x", format_vector(x)}, {"y", format_vector(y)}, {"check", "support"}};
        break;
      }
      if (pass) {
        FpVec px;
        for (auto i : sx) px.push_back(x[i]);
        const auto lhs = L.spaces[v].project(sx);
        const auto rhs = Subspace::span(p, sx.size(), {px}).perp();
        if (!(lhs == rhs)) {
          pass = false;
          bad = Json{{"x", format_vector(x)}, {"projection", lhs.to_string()}, {"expected", rhs.to_string()},
                     {"check", "projection"}};
        }
      }
      if (!pass) break;
    }
    Json detail{{"V", space_json(L.spaces[v])}, {"W", space_json(L.spaces[w])}, {"weight", min_w}};
    if (!pass) detail["failure"] = bad;
    r.record(pass, detail);
  }
  r.extremal["min_weight_witnesses_checked"] = witnesses;
  return r;
}

WitnessReport check_dim_bound(std::uint32_t q, std::size_t k, const Ceilings& ceilings) {
  const ZqGroup g(q, k, ceilings);
  const auto subs = enumerate_subgroups(g, ceilings);
  WitnessReport r;
  r.lemma = "dim-bound";
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> profile;
  for (const auto& h : subs) {
    std::size_t m = 0;
    for (std::uint64_t qm = q; qm <= h.size(); qm *= q) ++m;
    const auto dim = vh_extract(g, h).dim();
    ++profile[{h.size(), dim}];
    r.record(dim >= m, Json{{"order", h.size()}, {"dim_VH", dim}, {"m", m}});
  }
  Json pairs = Json::array();
  for (const auto& [key, count] : profile)
    pairs.push_back(Json{{"order", key.first}, {"dim_VH", key.second}, {"subgroups", count}});
  r.extremal["subgroups"] = subs.size();
  r.extremal["order_dim_profile"] = pairs;
  return r;
}

WitnessReport literal_mu_check(std::uint32_t q, std::size_t k) {
  const auto [p, t] = prime_power_of(q);
  const auto cq = PermGroup::cyclic(q);
  const auto action = WordAction::make(ActionKind::left_only, cq, k);
  const WordDomain omega(cq, k);
  const ZqGroup zq(q, k);
  const auto exponent = cyclic_exponents(*cq);
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i + 1 < t; ++i) scale *= p;
  const auto& tuples = action->tuples();
  auto to_zq = [&](const Subgroup& h) {
    std::vector<Elem> elems;
    for (auto e : h.elements()) {
      FpVec v;
      for (auto c : tuples.tuple(e)) v.push_back(exponent[c]);
      elems.push_back(zq.encode(v));
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup::from_elements(zq, elems);
  };
  // Point index of the tuple with the given exponents.
  std::vector<Elem> by_exponent(q);
  for (Elem e = 0; e < cq->order(); ++e) by_exponent[exponent[e]] = e;
  auto point_of = [&](const FpVec& x) {
    std::size_t j = 0;
    for (std::size_t i = k; i-- > 0;) j = j * cq->order() + by_exponent[(x[i] * scale) % q];
    return j;
  };

  WitnessReport r;
  r.lemma = "literal-mu";
  std::size_t max_mu = 0;
  std::vector<std::uint8_t> x(omega.variables());
  std::vector<std::vector<std::uint8_t>> values(omega.variables(), std::vector<std::uint8_t>(omega.size()));
  for (std::size_t j = 0; j < omega.size(); ++j) {
    omega.point(j, x);
    for (std::size_t v = 0; v < x.size(); ++v) values[v][j] = x[v];
  }
  for (std::size_t v = 0; v <= omega.variables(); ++v) {
    // The last pass is the constant function 0.
    const bool constant = v == omega.variables();
    std::vector<std::uint8_t> f = constant ? std::vector<std::uint8_t>(omega.size(), 0) : values[v];
    const auto h = to_zq(function_stabilizer(std::span<const std::uint8_t>(f), *action, omega));
    const auto vh = vh_extract(zq, h);
    const auto mu = mu_p(vh);
    bool pass = constant ? mu == 0 : mu <= 1;
    std::size_t worst_nonconstant = 0;
    for (const auto& w : covers(vh)) {
      bool varies = false;
      const auto base = f[point_of(FpVec(k, 0))];
      for (const auto& y : w.members())
        if (f[point_of(y)] != base) {
          varies = true;
          break;
        }
      if (!varies) continue;
      const auto g = min_weight_gap(vh, w).weight;
      worst_nonconstant = std::max(worst_nonconstant, g);
      if (g > 1) pass = false;
    }
    max_mu = std::max(max_mu, mu);
    Json detail{{"function", constant ? std::string("constant 0") : "x:" + std::to_string(v + 1)},
                {"stabilizer_order", h.size()},
                {"V_H", vh.to_string()},
                {"mu", mu},
                {"max_gap_on_nonconstant_covers", worst_nonconstant}};
    r.record(pass, detail);
  }
  r.extremal["max_mu_over_literals"] = max_mu;
  return r;
}

}  // namespace wordform
