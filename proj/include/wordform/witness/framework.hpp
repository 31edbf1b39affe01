#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "wordform/formula/formula.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/word.hpp"
#include "wordform/witness/witness_report.hpp"

namespace wordform {

using MuFn = std::function<std::size_t(const Subgroup&, const Subgroup&)>;

/// μ on pairs of subgroups of Q and the base c of the matching lower bound.
struct MuModel {
  std::string name;
  std::size_t c = 0;
  MuFn mu;
};

/// abelian-lift over C_p: μ_p of H as a subspace of F_p^k, c = p.
/// left-right over nonabelian simple G: largest component of E(H) ∩ E(K), c = min faithful degree.
/// μ(H, Q) = 0 in both. Other actions throw PreconditionError.
MuModel mu_model(const WordAction& action, const Ceilings& ceilings = {});

/// c^{d(μ^{1/d} - 1)}, and 0 when μ = 0.
long double mu_bound(std::size_t c, std::size_t mu, std::size_t d);

struct FrameworkReport {
  std::string model;
  std::uint64_t size = 0;
  std::uint32_t depth = 0;
  std::size_t d = 0;
  std::size_t h_order = 0;
  std::size_t k_order = 0;
  bool k_is_q = false;
  std::size_t mu = 0;
  std::size_t c = 0;
  long double bound = 0;           // at the given d
  long double bound_at_depth = 0;  // at the formula's own depth
  bool pass = false;
};

/// H = syntactic and K = semantic stabilizer of f, μ(H, K), and size(f) >= c^{d(μ^{1/d}-1)}.
FrameworkReport framework_check(const Formula& f, const WordAction& action, const Domain& omega, std::size_t d,
                                const Ceilings& ceilings = {});

Json to_json(const FrameworkReport& r);

}  // namespace wordform
