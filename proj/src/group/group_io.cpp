#include "wordform/group/group_io.hpp"

#include <fstream>
#include <sstream>

namespace wordform {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::shared_ptr<const PermGroup> parse_group(std::string_view text, const Ceilings& ceilings) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("group file is empty");
  const std::string head = lines[0];
  const std::string key = "degree:";
  if (head.rfind(key, 0) != 0) throw ParseError("group file must start with 'degree: n'");
  std::size_t degree = 0;
  try {
    std::size_t used = 0;
    auto rest = trim(head.substr(key.size()));
    long long v = std::stoll(rest, &used);
    if (used != rest.size() || v < 1) throw ParseError("bad degree");
    degree = static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError("bad degree in '" + head + "'");
  }
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(Perm::from_cycles(degree, lines[i]));
  try {
    return PermGroup::generate(degree, std::move(gens), ceilings);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::shared_ptr<const PermGroup> load_group(const std::string& path, const Ceilings& ceilings) {
  return parse_group(read_file(path), ceilings);
}

std::string format_group(const PermGroup& g) {
  std::ostringstream out;
  out << "degree: " << g.degree() << '\n';
  for (const auto& p : g.generator_perms()) out << p.to_cycles() << '\n';
  return out.str();
}

Subgroup parse_subgroup(std::string_view text, const TupleGroup& g, const PermGroup& base) {
  std::vector<Elem> gens;
  for (const auto& line : content_lines(text)) {
    std::vector<Elem> coords;
    std::size_t start = 0;
    while (true) {
      auto bar = line.find('|', start);
      auto field = trim(std::string_view(line).substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      auto idx = base.index_of(Perm::from_cycles(base.degree(), field));
      if (!idx) throw ParseError("coordinate not in the base group: " + field);
      coords.push_back(*idx);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (coords.size() != g.arity())
      throw ParseError("tuple has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(g.arity()));
    auto e = g.encode(coords);
    if (!e) throw ParseError("tuple violates the " + to_string(g.constraint()) + " constraint: " + line);
    gens.push_back(*e);
  }
  return Subgroup::generated(g, gens);
}

Subgroup load_subgroup(const std::string& path, const TupleGroup& g, const PermGroup& base) {
  return parse_subgroup(read_file(path), g, base);
}

std::string format_subgroup(const Subgroup& s, const TupleGroup& g) {
  std::ostringstream out;
  for (auto e : s.generators()) out << g.label(e) << '\n';
  return out.str();
}

}  // namespace wordform
