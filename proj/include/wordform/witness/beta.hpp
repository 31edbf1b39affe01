#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "wordform/formula/stabilizer.hpp"
#include "wordform/witness/framework.hpp"

namespace wordform {

inline constexpr long double beta_infinity = std::numeric_limits<long double>::infinity();

struct BetaOptions {
  std::size_t r_max = 4;
  std::size_t lattice_limit = 64;
  std::uint64_t node_budget = 10'000'000;
};

/// lo <= β_d(H, K) <= hi. hi is attained by an explicit good tuple with r <= r_max;
/// lo is the μ bound. `identity` marks K = Q, reported as exactly 0.
struct BetaInterval {
  long double lo = 0;
  long double hi = beta_infinity;
  std::size_t mu = 0;
  bool identity = false;
  bool budget_exhausted = false;
  std::size_t witness_components = 0;
};

/// Good-tuple search over the full subgroup lattice of a small Q acting on Ω.
class BetaSearch {
 public:
  BetaSearch(const VarAction& action, const Domain& omega, MuModel model, BetaOptions options = {});

  BetaInterval query(std::size_t d, const Subgroup& h, const Subgroup& k);
  /// β_0 as defined: 0 on Q, 1 on literal stabilizers below Q, else infinite.
  long double beta0(const Subgroup& h) const;
  bool in_b(const Subgroup& s) const;
  bool in_n(const Subgroup& s) const;
  const std::vector<Subgroup>& lattice() const noexcept { return lattice_; }

 private:
  std::size_t id(const Subgroup& s) const;
  long double beta0(std::size_t h) const;
  // Definitional upper bound: no identity shortcut below the top level.
  long double upper(std::size_t d, std::size_t h, std::size_t k, std::size_t* components);
  long double component_cost(std::size_t d, std::size_t hi, std::size_t li);

  const FiniteGroup& q_;
  MuModel model_;
  BetaOptions options_;
  std::vector<Subgroup> lattice_;
  std::size_t whole_ = 0;
  std::vector<bool> n_, b_, literal_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> meet_, core_;
  std::vector<std::vector<std::size_t>> index_;  // index_[a][b] = [a : a ∩ b]
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long double> memo_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long double> cost_memo_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

Json to_json(const BetaInterval& b);

}  // namespace wordform
