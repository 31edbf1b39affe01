#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wordform/group/perm_group.hpp"
#include "wordform/group/subgroup.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// "degree: n" followed by one generator per line in cycle notation.
/// Blank lines and lines starting with '#' are skipped. Throws ParseError.
std::shared_ptr<const PermGroup> parse_group(std::string_view text, const Ceilings& ceilings = {});
std::shared_ptr<const PermGroup> load_group(const std::string& path, const Ceilings& ceilings = {});
std::string format_group(const PermGroup& g);

/// One tuple per line, coordinates in cycle notation separated by '|'.
/// The result is the subgroup the listed tuples generate. Throws ParseError.
Subgroup parse_subgroup(std::string_view text, const TupleGroup& g, const PermGroup& base);
Subgroup load_subgroup(const std::string& path, const TupleGroup& g, const PermGroup& base);
std::string format_subgroup(const Subgroup& s, const TupleGroup& g);

std::string read_file(const std::string& path);

}  // namespace wordform
