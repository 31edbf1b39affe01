#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "wordform/formula/formula.hpp"
#include "wordform/group/perm_group.hpp"

namespace wordform {

struct VerifyOptions {
  bool force_exhaustive = false;
  std::size_t exhaustive_limit = 100000;  // |G|^k above this is sampled
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  bool exhaustive = true;
  std::size_t points = 0;
  std::size_t mismatches = 0;
  bool semantic_match = false;
  bool invariant = false;
  std::size_t generators_checked = 0;
  std::uint64_t size = 0;
  std::uint32_t depth = 0;
  std::optional<std::uint64_t> predicted_size;
  std::optional<std::uint32_t> predicted_depth;
  bool size_match = true;
  bool depth_match = true;

  bool ok() const { return semantic_match && invariant && size_match && depth_match; }
};

/// Compares f with the (u0, uk) word entry on Ω (or a seeded sample) and checks
/// invariance under the shifted-diagonal generators.
VerifyReport verify_construction(const Formula& f, std::shared_ptr<const PermGroup> g, std::size_t k,
                                 std::uint32_t u0, std::uint32_t uk, std::optional<std::uint64_t> predicted_size,
                                 std::optional<std::uint32_t> predicted_depth, const VerifyOptions& options = {});

/// Mismatch count between f and the word entry using reference evaluation on each point.
std::size_t count_mismatches_serial(const Formula& f, std::shared_ptr<const PermGroup> g, std::size_t k,
                                    std::uint32_t u0, std::uint32_t uk, const VerifyOptions& options = {});

}  // namespace wordform
