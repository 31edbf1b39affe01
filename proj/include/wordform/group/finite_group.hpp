#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordform {

/// Index of an element inside an enumerated finite group.
using Elem = std::uint32_t;

/// An enumerated finite group. Elements are the integers 0..order()-1.
///
/// multiply(a, b) is the product a*b; for permutation groups this is a∘b.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual std::size_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem multiply(Elem a, Elem b) const = 0;
  virtual Elem inverse(Elem a) const = 0;
  virtual std::vector<Elem> generators() const = 0;
  virtual std::string label(Elem a) const = 0;

  Elem conjugate(Elem x, Elem g) const { return multiply(inverse(g), multiply(x, g)); }
  std::uint64_t element_order(Elem a) const;
  bool is_abelian() const;
};

}  // namespace wordform
