#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wordform/group/subgroup.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// Path-shaped graph on vertices 0..k-1; edges[e] joins e and e+1.
struct EdgeGraph {
  std::size_t k = 0;
  std::vector<bool> edges;

  /// Components as closed vertex intervals [first, last].
  std::vector<std::pair<std::size_t, std::size_t>> components() const;
  /// Vertex count of the largest component (1 when there are no edges and k > 0).
  std::size_t largest() const;
  EdgeGraph meet(const EdgeGraph& other) const;
  std::size_t edge_count() const;
  /// True iff every edge of this graph is an edge of `other`.
  bool subset_of(const EdgeGraph& other) const;
};

/// {(a, a)} inside a full square base^2.
Subgroup diagonal(const TupleGroup& g2);
/// True iff H is the diagonal of the full square `g2`.
bool is_diagonal(const TupleGroup& g2, const Subgroup& h);

/// Edges e with H restricted to coordinates (2e+1, 2e+2) equal to the diagonal.
/// `q` must have arity 2k.
EdgeGraph edge_set(const TupleGroup& q, const Subgroup& h);

/// mu(H, K): 0 when K is all of Q, else the largest component of E(H) ∩ E(K).
/// `k_is_q` says whether K equals the whole ambient Q, which can be larger than `q`.
std::size_t mu_nonabelian(const TupleGroup& q, const Subgroup& h, const Subgroup& k, bool k_is_q);
/// Same, with `q` itself as Q.
std::size_t mu_nonabelian(const TupleGroup& q, const Subgroup& h, const Subgroup& k);

}  // namespace wordform
