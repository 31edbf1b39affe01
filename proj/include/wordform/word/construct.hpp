#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wordform/formula/formula.hpp"

namespace wordform {

enum class Polarity { sigma, pi };

std::string to_string(Polarity p);
Polarity polarity_from_string(const std::string& name);

/// Zero-based boundary pair (u0, uk).
struct ConstructionParams {
  std::size_t n = 2, k = 1, d = 1;
  Polarity polarity = Polarity::sigma;
  std::uint32_t u0 = 0, uk = 0;
};

/// r with r^d = k exactly, if any.
std::optional<std::uint64_t> exact_root(std::uint64_t k, std::uint64_t d);
/// Least r with r^d >= k.
std::uint64_t ceil_root(std::uint64_t k, std::uint64_t d);

/// Depth d+1 formula for the (u0, uk) word entry, with k^{1/d} blocks at every level.
/// Throws PreconditionError unless k^{1/d} is an integer.
Formula build_exact(const ConstructionParams& p);
/// Depth ≤ d+1; each level splits into ceil(len^{1/d}) contiguous blocks whose
/// lengths differ by at most one, longer blocks first.
Formula build_general(const ConstructionParams& p);

/// k * n^{d(k^{1/d}-1)}; throws PreconditionError unless k^{1/d} is an integer or on overflow.
std::uint64_t predicted_size(std::uint64_t n, std::uint64_t k, std::uint64_t d);
/// k * n^{d(ceil(k^{1/d})-1)+d} as a floating point value.
long double size_envelope(std::uint64_t n, std::uint64_t k, std::uint64_t d);

}  // namespace wordform
