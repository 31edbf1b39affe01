#include "wordform/witness/beta.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "wordform/group/lattice.hpp"
#include "wordform/witness/membership.hpp"

namespace wordform {

BetaSearch::BetaSearch(const VarAction& action, const Domain& omega, MuModel model, BetaOptions options)
    : q_(action.group()), model_(std::move(model)), options_(options) {
  lattice_ = enumerate_subgroups(q_, {q_.order(), options_.lattice_limit});
  const auto size = lattice_.size();
  whole_ = size - 1;
  PullbackTable table(action, omega);
  n_.resize(size);
  b_.resize(size);
  literal_.assign(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    n_[i] = in_N(table, lattice_[i]);
    b_[i] = in_B(table, lattice_[i]) == Verdict::yes;
  }
  std::vector<std::uint8_t> x(omega.variables());
  std::vector<std::uint32_t> values(omega.size());
  for (std::size_t v = 0; v < omega.variables(); ++v) {
    for (std::size_t j = 0; j < omega.size(); ++j) {
      omega.point(j, x);
      values[j] = x[v];
    }
    literal_[id(function_stabilizer(values, table, Subgroup::trivial(q_)))] = true;
  }
  leq_.assign(size, std::vector<bool>(size));
  meet_.assign(size, std::vector<std::size_t>(size));
  core_.assign(size, std::vector<std::size_t>(size));
  index_.assign(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      leq_[a][b] = lattice_[a].is_subgroup_of(lattice_[b]);
      meet_[a][b] = id(intersect(q_, lattice_[a], lattice_[b]));
      core_[a][b] = id(core_in(q_, lattice_[b], lattice_[a]));  // core of b in a
      index_[a][b] = lattice_[a].size() / lattice_[meet_[a][b]].size();
    }
}

std::size_t BetaSearch::id(const Subgroup& s) const {
  auto it = std::lower_bound(lattice_.begin(), lattice_.end(), s);
  if (it == lattice_.end() || !(*it == s)) throw PreconditionError("subgroup is not in the lattice");
  return static_cast<std::size_t>(it - lattice_.begin());
}

bool BetaSearch::in_b(const Subgroup& s) const { return b_[id(s)]; }
bool BetaSearch::in_n(const Subgroup& s) const { return n_[id(s)]; }

long double BetaSearch::beta0(std::size_t h) const {
  if (h == whole_) return 0;
  return literal_[h] ? 1 : beta_infinity;
}

long double BetaSearch::beta0(const Subgroup& h) const { return beta0(id(h)); }

long double BetaSearch::component_cost(std::size_t d, std::size_t hi, std::size_t li) {
  const auto key = std::make_tuple(d, hi, li);
  if (auto it = cost_memo_.find(key); it != cost_memo_.end()) return it->second;
  long double best = beta_infinity;
  const auto size = lattice_.size();
  for (std::size_t u = 0; u < size; ++u) {
    if (!leq_[core_[hi][u]][hi]) continue;
    const long double weight = static_cast<long double>(index_[hi][u]);
    for (std::size_t v = 0; v < size; ++v) {
      if (!b_[v] || !leq_[u][v] || !leq_[core_[hi][v]][li]) continue;
      const long double inner = d == 1 ? beta0(u) : upper(d - 1, u, v, nullptr);
      if (inner == beta_infinity) continue;
      best = std::min(best, weight * inner);
    }
  }
  cost_memo_[key] = best;
  return best;
}

long double BetaSearch::upper(std::size_t d, std::size_t h, std::size_t k, std::size_t* components) {
  const auto key = std::make_tuple(d, h, k);
  if (!components)
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto size = lattice_.size();
  // Candidate (H_i, L_i) pairs with H ≤ H_i ≤ L_i, L_i in N.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<long double> cost;
  for (std::size_t hi = 0; hi < size; ++hi) {
    if (!leq_[h][hi]) continue;
    for (std::size_t li = 0; li < size; ++li) {
      if (!n_[li] || !leq_[hi][li]) continue;
      const auto c = component_cost(d, hi, li);
      if (c == beta_infinity) continue;
      pairs.emplace_back(hi, li);
      cost.push_back(c);
    }
  }
  std::vector<long double> thresholds(cost.begin(), cost.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  long double result = beta_infinity;
  std::size_t used = 0;
  for (auto t : thresholds) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (cost[i] <= t) eligible.push_back(i);
    // Component order is irrelevant, so the search state is the pair of running intersections.
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    std::function<bool(std::size_t, std::size_t, std::size_t)> dfs =
        [&](std::size_t cur_h, std::size_t cur_l, std::size_t depth) -> bool {
      if (depth > 0 && cur_h == h && leq_[cur_l][k]) {
        used = depth;
        return true;
      }
      if (depth == options_.r_max) return false;
      if (!seen.insert({cur_h, cur_l, depth}).second) return false;
      for (std::size_t e = 0; e < eligible.size(); ++e) {
        if (++nodes_ > options_.node_budget) {
          exhausted_ = true;
          return false;
        }
        const auto [hi, li] = pairs[eligible[e]];
        const auto nh = meet_[cur_h][hi], nl = meet_[cur_l][li];
        if (depth > 0 && nh == cur_h && nl == cur_l) continue;
        if (dfs(nh, nl, depth + 1)) return true;
      }
      return false;
    };
    if (dfs(whole_, whole_, 0)) {
      result = t;
      break;
    }
    if (exhausted_) break;
  }
  if (components) *components = result == beta_infinity ? 0 : used;
  memo_[key] = result;
  return result;
}

BetaInterval BetaSearch::query(std::size_t d, const Subgroup& h, const Subgroup& k) {
  if (!h.is_subgroup_of(k)) throw PreconditionError("beta needs H <= K");
  const auto hi = id(h), ki = id(k);
  if (!b_[ki]) throw PreconditionError("K is not a stabilizer of a Boolean function on the domain");
  BetaInterval r;
  r.mu = model_.mu(h, k);
  if (ki == whole_) {
    r.identity = true;
    r.lo = r.hi = 0;
    return r;
  }
  r.lo = mu_bound(model_.c, r.mu, d);
  exhausted_ = false;
  r.hi = d == 0 ? beta0(hi) : upper(d, hi, ki, &r.witness_components);
  r.budget_exhausted = exhausted_;
  return r;
}

Json to_json(const BetaInterval& b) {
  Json j;
  j["lo"] = static_cast<double>(b.lo);
  if (b.hi == beta_infinity)
    j["hi"] = "inf";
  else
    j["hi"] = static_cast<double>(b.hi);
  j["mu"] = b.mu;
  j["identity"] = b.identity;
  j["budget_exhausted"] = b.budget_exhausted;
  j["witness_components"] = b.witness_components;
  return j;
}

}  // namespace wordform
