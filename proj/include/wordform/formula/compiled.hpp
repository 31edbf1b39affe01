#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordform/formula/domain.hpp"
#include "wordform/formula/formula.hpp"

namespace wordform {

/// A formula flattened into a topologically ordered DAG of distinct nodes,
/// evaluated on 64 assignments at a time (one per bit lane).
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  std::size_t variables() const noexcept { return variables_; }
  std::size_t node_count() const noexcept { return ops_.size(); }

  /// words[i] holds variable i across lanes; scratch is resized as needed.
  std::uint64_t eval64(std::span<const std::uint64_t> words, std::vector<std::uint64_t>& scratch) const;

 private:
  struct Op {
    Kind kind;
    std::uint32_t var;
    std::uint32_t first;
    std::uint32_t count;
  };
  std::vector<Op> ops_;
  std::vector<std::uint32_t> kids_;
  std::size_t variables_ = 0;
};

/// Values of f on every point of Ω. Parallel over 64-point batches when OpenMP is on.
std::vector<std::uint8_t> truth_table(const Formula& f, const Domain& omega);
/// Serial reference: evaluate() on each point.
std::vector<std::uint8_t> truth_table_serial(const Formula& f, const Domain& omega);

}  // namespace wordform
