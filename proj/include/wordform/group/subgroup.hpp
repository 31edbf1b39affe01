#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wordform/group/finite_group.hpp"

namespace wordform {

/// A subgroup of an enumerated group, held as a membership mask over the
/// parent's elements plus a sorted member list and a small generating set.
///
/// The parent is not stored; operations take it explicitly.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup generated(const FiniteGroup& g, std::span<const Elem> gens);
  /// Adopts a mask the caller knows is closed under the group operation.
  static Subgroup from_closed_mask(const FiniteGroup& g, std::vector<bool> mask);
  /// Checks closure of the element set and throws PreconditionError if it fails.
  static Subgroup from_elements(const FiniteGroup& g, std::span<const Elem> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Elem e) const { return e < mask_.size() && mask_[e]; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }
  /// Canonical order: by size, then by member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::vector<bool> mask_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept { return std::hash<std::vector<bool>>{}(s.mask()); }
};

/// Closure of a mask under multiplication by `gens`; the mask must contain the identity.
/// The first `closed` generators are taken to fix the initial mask already.
void close_mask(const FiniteGroup& g, std::vector<bool>& mask, std::span<const Elem> gens, std::size_t closed = 0);

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// g^{-1} S g.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Elem by);
/// Intersection of h^{-1} S h over h in H.
Subgroup core_in(const FiniteGroup& g, const Subgroup& s, const Subgroup& h);
/// True iff N is normalized by every element (generator) of H.
bool is_normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& h);
std::size_t index_of(const Subgroup& sub, const Subgroup& super);

/// The subgroup {q : test(q)} of G, given that this set is known to be a subgroup.
///
/// Searches coset by coset: a failing q rules out its whole coset q*S of the
/// stabilizer found so far, so only about [G:S] + log|S| tests run.
Subgroup search_subgroup(const FiniteGroup& g, const std::function<bool(Elem)>& test);
/// Same, starting from a subgroup `known` whose members are known to pass.
Subgroup search_subgroup(const FiniteGroup& g, const std::function<bool(Elem)>& test, const Subgroup& known);

}  // namespace wordform
