#include "wordform/word/var_action.hpp"

namespace wordform {

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::shifted_diagonal: return "shifted-diagonal";
    case ActionKind::left_right: return "left-right";
    case ActionKind::left_only: return "left-only";
    case ActionKind::abelian_lift: return "abelian-lift";
  }
  return "?";
}

ActionKind action_kind_from_string(const std::string& name) {
  if (name == "shifted-diagonal") return ActionKind::shifted_diagonal;
  if (name == "left-right") return ActionKind::left_right;
  if (name == "left-only") return ActionKind::left_only;
  if (name == "abelian-lift") return ActionKind::abelian_lift;
  throw ParseError("unknown action kind: " + name);
}

Perm block_perm(std::size_t n, const std::vector<Perm>& sigma, const std::vector<Perm>& tau) {
  if (sigma.size() != tau.size()) throw PreconditionError("sigma and tau differ in length");
  const std::size_t k = sigma.size();
  std::vector<std::uint32_t> images(k * n * n);
  for (std::size_t i = 0; i < k; ++i) {
    if (sigma[i].degree() != n || tau[i].degree() != n) throw PreconditionError("block map has the wrong degree");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        images[var_index(n, i, a, b)] = var_index(n, i, sigma[i](static_cast<std::uint32_t>(a)),
                                                  tau[i](static_cast<std::uint32_t>(b)));
  }
  return Perm(std::move(images));
}

std::vector<Perm> shifted_diagonal_generators(const PermGroup& g, std::size_t k) {
  if (k < 1) throw PreconditionError("k must be positive");
  const auto n = g.degree();
  std::vector<Perm> out;
  for (std::size_t slot = 0; slot + 1 < k; ++slot) {
    for (const auto& s : g.generator_perms()) {
      std::vector<Perm> sigma(k, Perm::identity(n)), tau(k, Perm::identity(n));
      tau[slot] = s;
      sigma[slot + 1] = s;
      out.push_back(block_perm(n, sigma, tau));
    }
  }
  return out;
}

std::shared_ptr<const WordAction> WordAction::make(ActionKind kind, std::shared_ptr<const PermGroup> base,
                                                   std::size_t k, const Ceilings& ceilings) {
  if (!base) throw PreconditionError("missing base group");
  if (k < 1) throw PreconditionError("k must be positive");
  std::shared_ptr<WordAction> a(new WordAction());
  a->kind_ = kind;
  a->base_ = base;
  a->k_ = k;
  switch (kind) {
    case ActionKind::shifted_diagonal:
      a->q_ = TupleGroup::make(base, 2 * k, Constraint::shifted_diagonal, ceilings);
      break;
    case ActionKind::left_right: a->q_ = TupleGroup::make(base, 2 * k, Constraint::q_left_right, ceilings); break;
    case ActionKind::left_only: a->q_ = TupleGroup::make(base, k, Constraint::full, ceilings); break;
    case ActionKind::abelian_lift:
      if (!base->is_abelian()) throw PreconditionError("abelian-lift needs an abelian base group");
      a->q_ = TupleGroup::make(base, k, Constraint::full, ceilings);
      break;
  }
  return a;
}

void WordAction::blocks(Elem q, std::vector<Elem>& sigma, std::vector<Elem>& tau) const {
  const auto t = q_->tuple(q);
  const auto& g = *base_;
  sigma.assign(k_, g.identity());
  tau.assign(k_, g.identity());
  switch (kind_) {
    case ActionKind::shifted_diagonal:
    case ActionKind::left_right:
      for (std::size_t i = 0; i < k_; ++i) {
        sigma[i] = t[2 * i];
        tau[i] = t[2 * i + 1];
      }
      break;
    case ActionKind::left_only:
      for (std::size_t i = 0; i < k_; ++i) sigma[i] = t[i];
      break;
    case ActionKind::abelian_lift: {
      Elem gamma = g.identity();
      for (std::size_t i = 0; i < k_; ++i) {
        sigma[i] = gamma;
        gamma = g.multiply(gamma, g.inverse(t[i]));
        tau[i] = gamma;
      }
      break;
    }
  }
}

Perm WordAction::perm(Elem q) const {
  std::vector<Elem> s, t;
  blocks(q, s, t);
  std::vector<Perm> sigma, tau;
  for (std::size_t i = 0; i < k_; ++i) {
    sigma.push_back(base_->element(s[i]));
    tau.push_back(base_->element(t[i]));
  }
  return block_perm(base_->degree(), sigma, tau);
}

}  // namespace wordform
