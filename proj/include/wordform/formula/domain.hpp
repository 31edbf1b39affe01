#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordform/group/perm.hpp"

namespace wordform {

/// A finite enumerated set Ω ⊆ {0,1}^m of assignments.
class Domain {
 public:
  virtual ~Domain() = default;

  virtual std::size_t size() const = 0;
  virtual std::size_t variables() const = 0;
  /// Writes point j as m bytes in {0,1}.
  virtual void point(std::size_t j, std::span<std::uint8_t> x) const = 0;
  /// Index of the assignment x, or nullopt if x is not in Ω.
  virtual std::optional<std::size_t> find(std::span<const std::uint8_t> x) const = 0;

  /// Bit-sliced points first..first+count-1 (count ≤ 64): words[i] bit l is x_i of point first+l.
  virtual void fill_lanes(std::size_t first, std::size_t count, std::span<std::uint64_t> words) const;

  /// For each j, the index of x_j∘pi, where (x∘pi)_i = x_{pi(i)}.
  /// Throws PreconditionError if Ω is not closed under pi.
  virtual std::vector<std::uint32_t> pullback(const Perm& pi) const;
};

/// An explicit list of assignments.
class ListDomain final : public Domain {
 public:
  ListDomain(std::size_t variables, std::vector<std::vector<std::uint8_t>> points);

  std::size_t size() const override { return points_.size(); }
  std::size_t variables() const override { return m_; }
  void point(std::size_t j, std::span<std::uint8_t> x) const override;
  std::optional<std::size_t> find(std::span<const std::uint8_t> x) const override;

 private:
  std::size_t m_;
  std::vector<std::vector<std::uint8_t>> points_;
};

/// All of {0,1}^m, point j having bit i equal to x_i. Requires m ≤ 24.
class CubeDomain final : public Domain {
 public:
  explicit CubeDomain(std::size_t variables);

  std::size_t size() const override { return std::size_t{1} << m_; }
  std::size_t variables() const override { return m_; }
  void point(std::size_t j, std::span<std::uint8_t> x) const override;
  std::optional<std::size_t> find(std::span<const std::uint8_t> x) const override;

 private:
  std::size_t m_;
};

}  // namespace wordform
