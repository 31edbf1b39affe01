#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wordform {

using FpVec = std::vector<std::uint32_t>;

/// Base-p code of v with the first coordinate most significant, so numeric
/// order on codes is lexicographic order on vectors.
std::uint64_t fp_code(std::span<const std::uint32_t> v, std::uint32_t p);
FpVec fp_decode(std::uint64_t code, std::uint32_t p, std::size_t k);
std::size_t weight(std::span<const std::uint32_t> v);
std::vector<std::size_t> support(std::span<const std::uint32_t> v);
std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);
bool is_prime(std::uint64_t p);
std::string format_vector(std::span<const std::uint32_t> v);

/// A subspace of F_p^k held by its reduced row-echelon basis, so equal
/// subspaces have equal bases.
class Subspace {
 public:
  /// Throws PreconditionError unless p is prime and every vector has length k.
  static Subspace span(std::uint32_t p, std::size_t k, const std::vector<FpVec>& vectors);
  static Subspace zero(std::uint32_t p, std::size_t k);
  static Subspace full(std::uint32_t p, std::size_t k);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<FpVec>& basis() const noexcept { return rows_; }
  bool contains(std::span<const std::uint32_t> v) const;
  bool is_subspace_of(const Subspace& other) const;
  /// All p^dim members in increasing code order.
  std::vector<FpVec> members() const;
  /// Codes of the basis rows, a canonical key.
  std::vector<std::uint64_t> key() const;

  Subspace perp() const;
  Subspace plus(const Subspace& other) const;
  Subspace plus(const FpVec& v) const;
  Subspace meet(const Subspace& other) const;
  /// Image under the projection onto the given coordinates, as a subspace of F_p^|coords|.
  Subspace project(std::span<const std::size_t> coords) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.rows_ == b.rows_;
  }

 private:
  Subspace(std::uint32_t p, std::size_t k) : p_(p), k_(k) {}
  void reduce();

  std::uint32_t p_;
  std::size_t k_;
  std::vector<FpVec> rows_;
};

/// Every subspace of F_p^k, sorted by (dim, key). Throws CeilingExceeded past `limit`.
std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t k, std::size_t limit = 20000);

}  // namespace wordform
