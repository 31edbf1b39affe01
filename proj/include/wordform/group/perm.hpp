#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordform {

/// A bijection of {0, ..., n-1}. Text I/O is one-based cycle notation.
///
/// Composition follows function composition: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws PreconditionError unless `images` is a permutation of 0..n-1.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Parses "(1 2 3)(4 5)"; "()" or an empty string is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  /// Order of the permutation as a group element.
  std::uint64_t order() const;
  std::string to_cycles() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace wordform
