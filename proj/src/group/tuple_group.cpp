#include "wordform/group/tuple_group.hpp"

#include <algorithm>
#include <sstream>

namespace wordform {

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::full: return "full-power";
    case Constraint::q_left_right: return "q-left-right";
    case Constraint::shifted_diagonal: return "shifted-diagonal";
    case Constraint::zero_sum: return "zero-sum";
  }
  return "?";
}

Constraint constraint_from_string(const std::string& name) {
  if (name == "full-power" || name == "full") return Constraint::full;
  if (name == "q-left-right") return Constraint::q_left_right;
  if (name == "shifted-diagonal") return Constraint::shifted_diagonal;
  if (name == "zero-sum") return Constraint::zero_sum;
  throw ParseError("unknown constraint: " + name);
}

std::shared_ptr<const TupleGroup> TupleGroup::make(std::shared_ptr<const FiniteGroup> base, std::size_t arity,
                                                   Constraint constraint, const Ceilings& ceilings) {
  if (!base) throw PreconditionError("missing base group");
  if (base->identity() != 0) throw PreconditionError("base group identity must be element 0");
  std::shared_ptr<TupleGroup> g(new TupleGroup());
  g->base_ = std::move(base);
  g->arity_ = arity;
  g->constraint_ = constraint;
  switch (constraint) {
    case Constraint::full: g->free_count_ = arity; break;
    case Constraint::q_left_right:
      if (arity < 2 || arity % 2 != 0) throw PreconditionError("q-left-right needs arity 2k with k >= 1");
      g->free_count_ = arity - 2;
      break;
    case Constraint::shifted_diagonal:
      if (arity < 2 || arity % 2 != 0) throw PreconditionError("shifted-diagonal needs arity 2k with k >= 1");
      g->free_count_ = arity / 2 - 1;
      break;
    case Constraint::zero_sum:
      if (arity < 1) throw PreconditionError("zero-sum needs arity >= 1");
      if (!g->base_->is_abelian()) throw PreconditionError("zero-sum needs an abelian base group");
      g->free_count_ = arity - 1;
      break;
  }
  const std::size_t n = g->base_->order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < g->free_count_; ++i) {
    if (order > ceilings.elements / n) throw CeilingExceeded("tuple group order", ceilings.elements);
    order *= n;
  }
  g->order_ = order;
  return g;
}

std::vector<Elem> TupleGroup::free_values(Elem e) const {
  const auto n = base_->order();
  std::vector<Elem> v(free_count_);
  std::size_t code = e;
  for (std::size_t i = 0; i < free_count_; ++i) {
    v[i] = static_cast<Elem>(code % n);
    code /= n;
  }
  return v;
}

Elem TupleGroup::from_free(std::span<const Elem> free) const {
  const auto n = base_->order();
  std::size_t code = 0;
  for (std::size_t i = free.size(); i-- > 0;) code = code * n + free[i];
  return static_cast<Elem>(code);
}

std::vector<Elem> TupleGroup::expand(std::span<const Elem> free) const {
  const Elem one = base_->identity();
  std::vector<Elem> t(arity_, one);
  switch (constraint_) {
    case Constraint::full:
      for (std::size_t j = 0; j < arity_; ++j) t[j] = free[j];
      break;
    case Constraint::q_left_right:
      for (std::size_t j = 1; j + 1 < arity_; ++j) t[j] = free[j - 1];
      break;
    case Constraint::shifted_diagonal:
      for (std::size_t i = 0; i < free_count_; ++i) t[2 * i + 1] = t[2 * i + 2] = free[i];
      break;
    case Constraint::zero_sum: {
      Elem prod = one;
      for (std::size_t j = 0; j + 1 < arity_; ++j) {
        t[j] = free[j];
        prod = base_->multiply(prod, free[j]);
      }
      t[arity_ - 1] = base_->inverse(prod);
      break;
    }
  }
  return t;
}

std::vector<Elem> TupleGroup::tuple(Elem e) const { return expand(free_values(e)); }

Elem TupleGroup::coordinate(Elem e, std::size_t j) const { return tuple(e)[j]; }

std::optional<Elem> TupleGroup::encode(std::span<const Elem> t) const {
  if (t.size() != arity_) return std::nullopt;
  std::vector<Elem> free(free_count_);
  switch (constraint_) {
    case Constraint::full:
      for (std::size_t j = 0; j < arity_; ++j) free[j] = t[j];
      break;
    case Constraint::q_left_right:
      for (std::size_t j = 1; j + 1 < arity_; ++j) free[j - 1] = t[j];
      break;
    case Constraint::shifted_diagonal:
      for (std::size_t i = 0; i < free_count_; ++i) free[i] = t[2 * i + 1];
      break;
    case Constraint::zero_sum:
      for (std::size_t j = 0; j + 1 < arity_; ++j) free[j] = t[j];
      break;
  }
  for (auto v : free)
    if (v >= base_->order()) return std::nullopt;
  auto back = expand(free);
  if (!std::equal(back.begin(), back.end(), t.begin())) return std::nullopt;
  return from_free(free);
}

Elem TupleGroup::multiply(Elem a, Elem b) const {
  // Every supported constraint multiplies componentwise on its free coordinates.
  const std::size_t n = base_->order();
  std::size_t x = a, y = b, out = 0, place = 1;
  for (std::size_t i = 0; i < free_count_; ++i) {
    out += place * base_->multiply(static_cast<Elem>(x % n), static_cast<Elem>(y % n));
    x /= n;
    y /= n;
    place *= n;
  }
  return static_cast<Elem>(out);
}

Elem TupleGroup::inverse(Elem a) const {
  const std::size_t n = base_->order();
  std::size_t x = a, out = 0, place = 1;
  for (std::size_t i = 0; i < free_count_; ++i) {
    out += place * base_->inverse(static_cast<Elem>(x % n));
    x /= n;
    place *= n;
  }
  return static_cast<Elem>(out);
}

std::vector<Elem> TupleGroup::generators() const {
  std::vector<Elem> gens;
  const auto base_gens = base_->generators();
  std::vector<Elem> free(free_count_, base_->identity());
  for (std::size_t i = 0; i < free_count_; ++i) {
    for (auto g : base_gens) {
      free[i] = g;
      gens.push_back(from_free(free));
    }
    free[i] = base_->identity();
  }
  return gens;
}

std::string TupleGroup::label(Elem a) const {
  std::ostringstream out;
  auto t = tuple(a);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) out << " | ";
    out << base_->label(t[j]);
  }
  return out.str();
}

}  // namespace wordform
