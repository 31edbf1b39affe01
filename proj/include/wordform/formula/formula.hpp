#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wordform/group/perm.hpp"

namespace wordform {

enum class Kind : std::uint8_t { zero, one, pos, neg, and_gate, or_gate, maj_gate };

class Formula;

/// Immutable formula node. Children are sorted by canonical bytes.
struct Node {
  Kind kind = Kind::zero;
  std::uint32_t var = 0;
  std::vector<Formula> children;
  std::string bytes;
  std::uint64_t size = 0;
  std::uint32_t depth = 0;
  std::size_t hash = 0;
};

/// An unordered labeled tree over AND/OR/MAJ with literals and constants at the
/// leaves. Equal trees up to child order have equal canonical bytes; equality
/// and ordering go through the bytes. Identical subtrees may share storage.
class Formula {
 public:
  Formula();  // constant 0

  static Formula constant(bool value);
  static Formula literal(std::uint32_t var, bool positive = true);
  /// Gate with children stored in canonical order.
  static Formula gate(Kind kind, std::vector<Formula> children);
  /// Like gate(), but children of the same AND/OR kind are spliced into the result.
  static Formula merged(Kind kind, std::vector<Formula> children);

  Kind kind() const noexcept { return node_->kind; }
  std::uint32_t var() const noexcept { return node_->var; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }
  const std::string& bytes() const noexcept { return node_->bytes; }
  /// Number of literal leaves in the tree.
  std::uint64_t size() const noexcept { return node_->size; }
  /// Gates on the longest leaf-to-root path.
  std::uint32_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }
  const Node* node() const noexcept { return node_.get(); }

  bool is_constant() const noexcept { return kind() == Kind::zero || kind() == Kind::one; }
  bool is_literal() const noexcept { return kind() == Kind::pos || kind() == Kind::neg; }
  bool is_gate() const noexcept { return kind() >= Kind::and_gate; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || (a.hash() == b.hash() && a.bytes() == b.bytes());
  }
  friend bool operator<(const Formula& a, const Formula& b) { return a.bytes() < b.bytes(); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

std::string to_string(Kind k);

/// One more than the largest literal index, 0 without literals.
std::uint32_t variable_bound(const Formula& f);

/// Reference evaluation. MAJ is 1 iff strictly more than half of its children are 1.
/// Throws PreconditionError if a literal index is outside the assignment.
bool evaluate(const Formula& f, std::span<const std::uint8_t> x);

/// Relabels every literal x_i to x_{pi(i)}; then eval(act(pi, f), x) = eval(f, x∘pi).
/// Throws PreconditionError if a literal index is outside pi.
Formula act(const Perm& pi, const Formula& f);

/// DeMorgan dual. MAJ is negated only at odd arity; even arity throws PreconditionError.
Formula negate(const Formula& f);

/// Flips the polarity of the literal occurrence with the given depth-first
/// ordinal (children in canonical order). Throws PreconditionError if out of range.
Formula flip_literal(const Formula& f, std::uint64_t ordinal);

/// Distinct nodes reachable from f, counted by canonical bytes.
std::size_t distinct_nodes(const Formula& f);

}  // namespace wordform
