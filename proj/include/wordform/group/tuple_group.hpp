#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/finite_group.hpp"

namespace wordform {

/// Named subgroups of a direct power base^arity.
enum class Constraint {
  full,              // all of base^arity
  q_left_right,      // arity 2k, first and last coordinate trivial
  shifted_diagonal,  // arity 2k, (1, g1, g1, ..., g_{k-1}, g_{k-1}, 1)
  zero_sum,          // arity k, abelian base, product of all coordinates trivial
};

std::string to_string(Constraint c);
Constraint constraint_from_string(const std::string& name);

/// A constrained direct power of a finite group, enumerated through its free
/// coordinates. Element codes are mixed-radix numbers over the free values.
class TupleGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const TupleGroup> make(std::shared_ptr<const FiniteGroup> base, std::size_t arity,
                                                Constraint constraint, const Ceilings& ceilings = {});

  const FiniteGroup& base() const noexcept { return *base_; }
  std::shared_ptr<const FiniteGroup> base_ptr() const noexcept { return base_; }
  std::size_t arity() const noexcept { return arity_; }
  Constraint constraint() const noexcept { return constraint_; }
  /// Number of free coordinates; order() == |base|^free_count().
  std::size_t free_count() const noexcept { return free_count_; }

  std::vector<Elem> tuple(Elem e) const;
  Elem coordinate(Elem e, std::size_t j) const;
  /// Element with the given coordinates, or nullopt if the tuple violates the constraint.
  std::optional<Elem> encode(std::span<const Elem> tuple) const;
  /// Element with the given free coordinates.
  Elem from_free(std::span<const Elem> free) const;

  std::size_t order() const override { return order_; }
  Elem identity() const override { return 0; }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override;
  std::vector<Elem> generators() const override;
  std::string label(Elem a) const override;

 private:
  TupleGroup() = default;
  std::vector<Elem> free_values(Elem e) const;
  std::vector<Elem> expand(std::span<const Elem> free) const;

  std::shared_ptr<const FiniteGroup> base_;
  std::size_t arity_ = 0;
  Constraint constraint_ = Constraint::full;
  std::size_t free_count_ = 0;
  std::size_t order_ = 1;
};

}  // namespace wordform
