#pragma once

#include <map>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/fp/subspace.hpp"
#include "wordform/witness/witness_report.hpp"

namespace wordform {

/// All subspaces of F_p^k with their member codes, perps, covers and μ_p.
struct FpLattice {
  std::uint32_t p = 2;
  std::size_t k = 1;
  std::vector<Subspace> spaces;
  std::vector<std::vector<std::uint64_t>> codes;  // sorted member codes
  std::vector<std::size_t> perp;
  std::vector<std::vector<std::size_t>> covers;
  std::vector<std::size_t> mu;
  std::map<std::vector<std::uint64_t>, std::size_t> index;

  static FpLattice build(std::uint32_t p, std::size_t k, std::size_t limit = 20000);
  std::size_t find(const Subspace& s) const { return index.at(s.key()); }
  bool contains(std::size_t s, std::uint64_t code) const;
  bool below(std::size_t a, std::size_t b) const;
  /// min weight over codes of perp(v) outside perp(w), with the least such code.
  std::pair<std::size_t, std::uint64_t> gap(std::size_t v, std::size_t w) const;
};

/// max(μ(H_1), μ(H_2)) >= μ(H_1 ∩ H_2) over subspace pairs.
WitnessReport check_intersection_fp(std::uint32_t p, std::size_t k, const SweepMode& mode = {});
/// A T > U with dim T = dim U + 1, H + T = W and gap(U,T)(dim H - dim U + 1) >= gap(H,W), over triples (H, W, U).
WitnessReport check_shrinkage_fp(std::uint32_t p, std::size_t k, const SweepMode& mode = {});
/// For every (V, W) and every min-weight witness x: no y in V^⊥ \ <x> with Supp(y) ⊆ Supp(x),
/// and π_Supp(x)(V) = <π_Supp(x)(x)>^⊥.
WitnessReport perp_uniqueness_check(std::uint32_t p, std::size_t k, const SweepMode& mode = {});
/// |H| >= q^m implies dim V_H >= m, over all subgroups H of (Z/qZ)^k.
WitnessReport check_dim_bound(std::uint32_t q, std::size_t k, const Ceilings& ceilings = {});
/// μ(V_H) <= 1 for the left-only stabilizer H of every coordinate function of Ω = C_q^k,
/// and μ(V_H, W) <= 1 for every cover W on which the function is not constant.
WitnessReport literal_mu_check(std::uint32_t q, std::size_t k);

}  // namespace wordform
