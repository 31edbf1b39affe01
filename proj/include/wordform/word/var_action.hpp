#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wordform/formula/stabilizer.hpp"
#include "wordform/group/perm_group.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// Variable index of M_{i,a,b}, all zero-based: i*n^2 + a*n + b.
inline std::uint32_t var_index(std::size_t n, std::size_t i, std::size_t a, std::size_t b) {
  return static_cast<std::uint32_t>(i * n * n + a * n + b);
}

/// Ways a group acts on the kn^2 word variables. Every kind is a block action
/// M_{i,a,b} -> M_{i,σ_i(a),τ_i(b)}; on a tuple (h_i) it gives h_i -> σ_i^{-1} h_i τ_i.
enum class ActionKind {
  shifted_diagonal,  // Q = G^{k-1} inside G^{2k}; σ_i, τ_i read from coordinates 2i, 2i+1
  left_right,        // Q = {g_1 = g_{2k} = 1} ≤ G^{2k}; same layout
  left_only,         // Q = G^k; σ_i = x_i, τ_i = 1
  abelian_lift,      // Q = G^k, G abelian; σ_i = γ_{i-1}, τ_i = γ_i with γ_i = x_1^{-1}...x_i^{-1}
};

std::string to_string(ActionKind kind);
ActionKind action_kind_from_string(const std::string& name);

/// The block permutation of [kn^2] given σ_i and τ_i as points maps.
Perm block_perm(std::size_t n, const std::vector<Perm>& sigma, const std::vector<Perm>& tau);

/// Index permutations of the shifted-diagonal generators, one per base generator
/// per free slot, without enumerating G^{k-1}.
std::vector<Perm> shifted_diagonal_generators(const PermGroup& g, std::size_t k);

class WordAction final : public VarAction {
 public:
  static std::shared_ptr<const WordAction> make(ActionKind kind, std::shared_ptr<const PermGroup> base, std::size_t k,
                                                const Ceilings& ceilings = {});

  ActionKind kind() const noexcept { return kind_; }
  const PermGroup& base() const noexcept { return *base_; }
  std::shared_ptr<const PermGroup> base_ptr() const noexcept { return base_; }
  std::size_t k() const noexcept { return k_; }
  const TupleGroup& tuples() const noexcept { return *q_; }
  std::shared_ptr<const TupleGroup> tuples_ptr() const noexcept { return q_; }

  /// σ_i and τ_i of q as elements of the base group.
  void blocks(Elem q, std::vector<Elem>& sigma, std::vector<Elem>& tau) const;

  const FiniteGroup& group() const override { return *q_; }
  std::size_t variables() const override { return k_ * base_->degree() * base_->degree(); }
  Perm perm(Elem q) const override;

 private:
  WordAction() = default;
  ActionKind kind_ = ActionKind::left_only;
  std::shared_ptr<const PermGroup> base_;
  std::shared_ptr<const TupleGroup> q_;
  std::size_t k_ = 0;
};

}  // namespace wordform
