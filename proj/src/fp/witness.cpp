#include "wordform/fp/witness.hpp"

#include <map>

#include "wordform/error.hpp"

namespace wordform {

WeightGap min_weight_gap(const Subspace& v, const Subspace& w) {
  if (v.p() != w.p() || v.k() != w.k() || w.dim() != v.dim() + 1 || !v.is_subspace_of(w))
    throw PreconditionError("min_weight_gap needs V < W with dim W = dim V + 1");
  const auto wp = w.perp();
  WeightGap best;
  best.weight = v.k() + 1;
  for (const auto& x : v.perp().members()) {  // increasing code order
    if (wp.contains(x)) continue;
    const auto wt = weight(x);
    if (wt < best.weight) {
      best.weight = wt;
      best.witness = x;
    }
  }
  if (best.witness.empty()) throw PreconditionError("V^perp \\ W^perp is empty");
  return best;
}

std::vector<Subspace> covers(const Subspace& v) {
  std::map<std::vector<std::uint64_t>, Subspace> out;
  for (const auto& x : Subspace::full(v.p(), v.k()).members()) {
    if (v.contains(x)) continue;
    auto w = v.plus(x);
    out.emplace(w.key(), w);
  }
  std::vector<Subspace> list;
  for (auto& [key, w] : out) list.push_back(w);
  return list;
}

std::size_t mu_p(const Subspace& v) {
  std::size_t best = 0;
  for (const auto& w : covers(v)) best = std::max(best, min_weight_gap(v, w).weight);
  return best;
}

ShrinkageResult shrinkage_T_search(const Subspace& h, const Subspace& w, const Subspace& u) {
  if (!u.is_subspace_of(h)) throw PreconditionError("shrinkage search needs U <= H");
  ShrinkageResult r;
  r.gap_hw = min_weight_gap(h, w).weight;
  r.m = h.dim() - u.dim() + 1;
  std::map<std::vector<std::uint64_t>, Subspace> seen;
  for (const auto& x : w.members()) {
    if (h.contains(x)) continue;
    auto t = u.plus(x);
    if (!seen.emplace(t.key(), t).second) continue;
    ++r.candidates;
    const auto g = min_weight_gap(u, t).weight;
    if (!r.t || g > r.gap_ut) {
      r.t = t;
      r.gap_ut = g;
    }
  }
  r.found = r.t && r.gap_ut * r.m >= r.gap_hw && h.plus(*r.t) == w;
  return r;
}

}  // namespace wordform
