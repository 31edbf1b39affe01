#include "wordform/witness/membership.hpp"

#include <algorithm>
#include <string>

namespace wordform {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

bool in_N(const PullbackTable& table, const Subgroup& s) {
  auto ids = orbit_ids(table, s);
  return function_stabilizer(ids, table, s) == s;
}

std::vector<std::uint32_t> orbit_union(const std::vector<std::uint32_t>& ids, const std::vector<bool>& chosen) {
  std::vector<std::uint32_t> out(ids.size());
  for (std::size_t j = 0; j < ids.size(); ++j) out[j] = chosen[ids[j]] ? 1 : 0;
  return out;
}

Verdict in_B(const PullbackTable& table, const Subgroup& s, std::size_t exhaustive_orbits,
             std::vector<std::uint32_t>* witness) {
  auto ids = orbit_ids(table, s);
  const std::size_t orbits = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  auto attempt = [&](const std::vector<bool>& chosen) {
    auto f = orbit_union(ids, chosen);
    if (function_stabilizer(f, table, s) == s) {
      if (witness) *witness = std::move(f);
      return true;
    }
    return false;
  };
  if (orbits <= exhaustive_orbits) {
    // A union and its complement have the same stabilizer, so fix orbit 0 outside.
    std::vector<bool> chosen(orbits, false);
    const std::uint64_t limit = orbits == 0 ? 1 : std::uint64_t{1} << (orbits - 1);
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      for (std::size_t o = 1; o < orbits; ++o) chosen[o] = (bits >> (o - 1)) & 1;
      if (attempt(chosen)) return Verdict::yes;
    }
    return Verdict::no;
  }
  std::vector<bool> chosen(orbits, false);
  for (std::size_t o = 0; o < orbits; ++o) {
    chosen[o] = true;
    if (attempt(chosen)) return Verdict::yes;
    chosen[o] = false;
  }
  return Verdict::unknown;
}

}  // namespace wordform
