#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wordform/formula/domain.hpp"
#include "wordform/group/perm_group.hpp"

namespace wordform {

/// matrix(g)[a*n + b] = 1 iff g(b) = a.
std::vector<std::uint8_t> perm_matrix(const Perm& g);

/// The (u0, uk) entry of matrix(h_1)...matrix(h_k), i.e. [h_1(...h_k(uk)) = u0].
bool word_value(const PermGroup& g, std::span<const Elem> tuple, std::uint32_t u0, std::uint32_t uk);
/// Same, through explicit 0/1 matrix products.
bool word_value_matrix(const PermGroup& g, std::span<const Elem> tuple, std::uint32_t u0, std::uint32_t uk);

/// Ω = Ḡ^k as assignments of the kn^2 variables M_{i,a,b} = [h_i(b) = a].
///
/// The full domain lists every tuple, tuple j having h_{i+1} = digit i of j in
/// base |G|. A sampled domain holds a fixed list of seeded uniform tuples.
class WordDomain final : public Domain {
 public:
  /// Throws CeilingExceeded if |G|^k > limit.
  WordDomain(std::shared_ptr<const PermGroup> g, std::size_t k, std::size_t limit = 200000);
  static WordDomain sampled(std::shared_ptr<const PermGroup> g, std::size_t k, std::size_t count, std::uint64_t seed);

  const PermGroup& group() const noexcept { return *g_; }
  std::size_t k() const noexcept { return k_; }
  bool exhaustive() const noexcept { return samples_.empty(); }
  /// The tuple (h_1..h_k) of point j.
  void tuple(std::size_t j, std::span<Elem> out) const;

  std::size_t size() const override { return size_; }
  std::size_t variables() const override { return k_ * n_ * n_; }
  void point(std::size_t j, std::span<std::uint8_t> x) const override;
  std::optional<std::size_t> find(std::span<const std::uint8_t> x) const override;
  void fill_lanes(std::size_t first, std::size_t count, std::span<std::uint64_t> words) const override;
  /// Uses per-block digit maps when pi is a block permutation; otherwise the generic path.
  std::vector<std::uint32_t> pullback(const Perm& pi) const override;

 private:
  WordDomain() = default;
  std::shared_ptr<const PermGroup> g_;
  std::size_t k_ = 0, n_ = 0, size_ = 0;
  std::vector<Elem> samples_;  // k digits per sampled point
};

/// Values of the (u0, uk) word entry on every point of Ω.
std::vector<std::uint8_t> word_table(const WordDomain& omega, std::uint32_t u0, std::uint32_t uk);

}  // namespace wordform
