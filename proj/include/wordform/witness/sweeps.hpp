#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/formula/stabilizer.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/word.hpp"
#include "wordform/witness/edge_graph.hpp"
#include "wordform/witness/witness_report.hpp"

namespace wordform {

/// Q = {g_1 = g_2k = 1} ≤ G^{2k} acting on Ω = G^k, with the subgroup lattice of Q.
struct LeftRightSetting {
  std::shared_ptr<const PermGroup> g;
  std::size_t k = 0;
  std::size_t n = 0;  // min faithful degree of G
  std::shared_ptr<const WordAction> action;
  std::shared_ptr<const WordDomain> omega;
  std::shared_ptr<const PullbackTable> pullbacks;
  std::vector<Subgroup> lattice;
  std::vector<EdgeGraph> edges;  // E(S) per lattice member

  const TupleGroup& q() const { return action->tuples(); }
  /// G must be nonabelian simple. k = 2 uses Goursat on G^2; larger k enumerates Q directly.
  static LeftRightSetting build(std::shared_ptr<const PermGroup> g, std::size_t k, const Ceilings& ceilings = {});
};

/// Lattice of the full square G^2 from Goursat triples.
std::vector<Subgroup> square_lattice(const TupleGroup& g2, const Ceilings& ceilings = {});

/// One intersection-lemma instance. Returns true iff some i has every component of
/// E(H) ∩ E(K) inside E(H_i) ∩ E(L_i) and μ(H_i, L_i) >= μ(H, K).
bool intersection_instance(const TupleGroup& q, std::span<const Subgroup> hs, std::span<const Subgroup> ls,
                           const Subgroup& h, const Subgroup& k, Json* detail = nullptr);
/// Hypotheses of the intersection lemma apart from N/B membership: H_i ≤ L_i, ∩H_i = H, ∩L_i ≤ K.
bool intersection_hypotheses(const TupleGroup& q, std::span<const Subgroup> hs, std::span<const Subgroup> ls,
                             const Subgroup& h, const Subgroup& k);

/// One shrinkage-lemma instance with [H : H∩U] <= n^{m-1} for the least such m:
/// μ(U,V) >= μ(U∩H,V) and m·μ(U∩H,V) >= μ(H,L).
bool shrinkage_instance(const TupleGroup& q, std::size_t n, const Subgroup& h, const Subgroup& u, const Subgroup& l,
                        const Subgroup& v, Json* detail = nullptr);
/// U ≤ V, H ≤ L, core_H(U) ≤ H, core_H(V) ≤ L.
bool shrinkage_hypotheses(const TupleGroup& q, const Subgroup& h, const Subgroup& u, const Subgroup& l,
                          const Subgroup& v);

/// Sampled instances with L_i and K built as stabilizers of explicit functions on Ω.
/// Exhaustive mode throws CeilingExceeded: the instance space is out of reach for every nonabelian simple G.
WitnessReport check_intersection_property(const LeftRightSetting& s, const SweepMode& mode);
WitnessReport check_shrinkage_property(const LeftRightSetting& s, const SweepMode& mode);

/// [G^2 : H] < n^m implies |minimal support| <= m, over all subgroups of G^2.
WitnessReport support_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice, std::size_t n);
/// Every subgroup of G^2 containing Diag is Diag or G^2.
WitnessReport diag_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice);
/// Every normal N of G^2 with G^2/N ≅ G has exactly one j with N restricted to {j} proper.
WitnessReport quotient_sweep(const TupleGroup& g2, std::span<const Subgroup> lattice);

}  // namespace wordform
