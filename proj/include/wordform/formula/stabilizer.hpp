#pragma once

#include <span>
#include <vector>

#include "wordform/formula/domain.hpp"
#include "wordform/formula/formula.hpp"
#include "wordform/group/subgroup.hpp"

namespace wordform {

/// A homomorphism from an enumerated group Q into Sym([m]), acting on formulas by act().
class VarAction {
 public:
  virtual ~VarAction() = default;
  virtual const FiniteGroup& group() const = 0;
  virtual std::size_t variables() const = 0;
  virtual Perm perm(Elem q) const = 0;
};

/// A VarAction given by explicit permutations for every element of Q.
class TableAction final : public VarAction {
 public:
  TableAction(const FiniteGroup& q, std::vector<Perm> table);
  const FiniteGroup& group() const override { return q_; }
  std::size_t variables() const override { return m_; }
  Perm perm(Elem q) const override { return table_[q]; }

 private:
  const FiniteGroup& q_;
  std::vector<Perm> table_;
  std::size_t m_;
};

/// True iff act(g, f) = f for every g.
bool is_invariant(const Formula& f, std::span<const Perm> generators);

/// {q : act(q, f) = f}.
Subgroup syntactic_stabilizer(const Formula& f, const VarAction& action);
/// Reference: tests every element of Q.
Subgroup syntactic_stabilizer_serial(const Formula& f, const VarAction& action);

/// {q : f(x∘q) = f(x) for all x in Ω}. Throws PreconditionError if Ω is not Q-closed.
Subgroup semantic_stabilizer(const Formula& f, const VarAction& action, const Domain& omega);
/// Same, for a function given by its values on Ω.
Subgroup function_stabilizer(std::span<const std::uint8_t> values, const VarAction& action, const Domain& omega);
Subgroup function_stabilizer(std::span<const std::uint32_t> values, const VarAction& action, const Domain& omega);
/// Reference: generic pullback and a serial scan over every element of Q.
Subgroup semantic_stabilizer_serial(const Formula& f, const VarAction& action, const Domain& omega);

}  // namespace wordform

namespace wordform {

/// Pullbacks of every element of Q on Ω, for repeated stabilizer queries.
class PullbackTable {
 public:
  /// Throws CeilingExceeded if |Q|·|Ω| exceeds `limit`.
  PullbackTable(const VarAction& action, const Domain& omega, std::size_t limit = 50'000'000);

  const FiniteGroup& group() const noexcept { return q_; }
  std::size_t points() const noexcept { return points_; }
  std::span<const std::uint32_t> operator()(Elem q) const {
    return {table_.data() + static_cast<std::size_t>(q) * points_, points_};
  }

 private:
  const FiniteGroup& q_;
  std::size_t points_;
  std::vector<std::uint32_t> table_;
};

/// Stabilizer of an integer-valued function on Ω, given a subgroup known to fix it.
Subgroup function_stabilizer(std::span<const std::uint32_t> values, const PullbackTable& table,
                             const Subgroup& known);

/// Orbit index of every point of Ω under the subgroup S, numbered by first appearance.
std::vector<std::uint32_t> orbit_ids(const PullbackTable& table, const Subgroup& s);

}  // namespace wordform
