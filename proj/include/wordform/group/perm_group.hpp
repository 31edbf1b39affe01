#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/group/finite_group.hpp"
#include "wordform/group/perm.hpp"

namespace wordform {

/// A permutation group with its full element list.
///
/// Elements are sorted by image list, so the identity is element 0.
class PermGroup final : public FiniteGroup {
 public:
  /// Closure of `generators` under composition. Throws PreconditionError on a
  /// degree mismatch and CeilingExceeded past `ceilings.elements`.
  static std::shared_ptr<const PermGroup> generate(std::size_t degree, std::vector<Perm> generators,
                                                   const Ceilings& ceilings = {});
  static std::shared_ptr<const PermGroup> symmetric(std::size_t degree);
  static std::shared_ptr<const PermGroup> cyclic(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generator_perms() const noexcept { return generator_perms_; }
  const Perm& element(Elem e) const { return elements_[e]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  std::optional<Elem> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  /// Image of point x (0-based) under element e.
  std::uint32_t apply(Elem e, std::uint32_t x) const { return elements_[e](x); }

  std::size_t order() const override { return elements_.size(); }
  Elem identity() const override { return 0; }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override { return inverses_[a]; }
  std::vector<Elem> generators() const override { return generator_elems_; }
  std::string label(Elem a) const override { return elements_[a].to_cycles(); }

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Perm> generator_perms_;
  std::vector<Elem> generator_elems_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> inverses_;
  std::vector<Elem> table_;  // Cayley table, row-major, empty for large groups
};

}  // namespace wordform
