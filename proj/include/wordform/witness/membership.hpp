#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordform/formula/stabilizer.hpp"

namespace wordform {

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

/// S is in N iff S is the stabilizer of some function Ω -> Z, i.e. of its own orbit labelling.
bool in_N(const PullbackTable& table, const Subgroup& s);

/// S is in B iff S is the stabilizer of some Boolean function on Ω.
///
/// Such a function is a union of S-orbits. Unions are searched exhaustively when
/// S has at most `exhaustive_orbits` orbits, else single orbits and their
/// complements are tried and a miss gives Verdict::unknown.
Verdict in_B(const PullbackTable& table, const Subgroup& s, std::size_t exhaustive_orbits = 16,
             std::vector<std::uint32_t>* witness = nullptr);

/// Indicator of the union of the S-orbits flagged in `chosen`.
std::vector<std::uint32_t> orbit_union(const std::vector<std::uint32_t>& ids, const std::vector<bool>& chosen);

}  // namespace wordform
