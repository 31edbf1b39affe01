#pragma once

#include <optional>
#include <vector>

#include "wordform/fp/subspace.hpp"

namespace wordform {

struct WeightGap {
  std::size_t weight = 0;
  FpVec witness;  // lexicographically least vector of that weight
};

/// min over V^⊥ \ W^⊥ of the Hamming weight. Throws PreconditionError unless
/// V < W with dim W = dim V + 1.
WeightGap min_weight_gap(const Subspace& v, const Subspace& w);

/// Every W > V with dim W = dim V + 1, in key order.
std::vector<Subspace> covers(const Subspace& v);

/// max over covers W of min_weight_gap(V, W); 0 for the full space.
std::size_t mu_p(const Subspace& v);

struct ShrinkageResult {
  bool found = false;
  std::optional<Subspace> t;
  std::size_t gap_ut = 0;  // min_weight_gap(U, T)
  std::size_t gap_hw = 0;  // min_weight_gap(H, W)
  std::size_t m = 1;       // dim H - dim U + 1
  std::size_t candidates = 0;
};

/// Searches T = U + span{t}, t in W \ H, for gap(U,T) * m >= gap(H,W); returns
/// the T with the largest gap, ties going to the least t. Throws PreconditionError on bad input.
ShrinkageResult shrinkage_T_search(const Subspace& h, const Subspace& w, const Subspace& u);

}  // namespace wordform
