#include "wordform/formula/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "wordform/error.hpp"

namespace wordform {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xFF));
}

std::shared_ptr<Node> make_leaf(Kind kind, std::uint32_t var) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->var = var;
  switch (kind) {
    case Kind::zero: n->bytes = std::string(1, '\x00'); break;
    case Kind::one: n->bytes = std::string(1, '\x01'); break;
    case Kind::pos:
    case Kind::neg:
      n->bytes.push_back(kind == Kind::pos ? '\x02' : '\x03');
      put_u32(n->bytes, var);
      n->size = 1;
      break;
    default: throw PreconditionError("not a leaf kind");
  }
  n->hash = std::hash<std::string>{}(n->bytes);
  return n;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::zero: return "0";
    case Kind::one: return "1";
    case Kind::pos: return "x";
    case Kind::neg: return "!x";
    case Kind::and_gate: return "and";
    case Kind::or_gate: return "or";
    case Kind::maj_gate: return "maj";
  }
  return "?";
}

Formula::Formula() : node_(make_leaf(Kind::zero, 0)) {}

Formula Formula::constant(bool value) {
  static const Formula zero(make_leaf(Kind::zero, 0));
  static const Formula one(make_leaf(Kind::one, 0));
  return value ? one : zero;
}

Formula Formula::literal(std::uint32_t var, bool positive) {
  return Formula(make_leaf(positive ? Kind::pos : Kind::neg, var));
}

Formula Formula::gate(Kind kind, std::vector<Formula> children) {
  if (kind < Kind::and_gate) throw PreconditionError("not a gate kind");
  if (children.size() > 0xFFFFFFFFu) throw PreconditionError("gate fan-in too large");
  std::sort(children.begin(), children.end());
  auto n = std::make_shared<Node>();
  n->kind = kind;
  std::size_t total = 5;
  for (const auto& c : children) total += c.bytes().size();
  n->bytes.reserve(total);
  n->bytes.push_back(static_cast<char>(0x10 + (static_cast<int>(kind) - static_cast<int>(Kind::and_gate))));
  put_u32(n->bytes, static_cast<std::uint32_t>(children.size()));
  std::uint32_t depth = 0;
  for (const auto& c : children) {
    n->bytes += c.bytes();
    n->size += c.size();
    depth = std::max(depth, c.depth());
  }
  n->depth = depth + 1;
  n->hash = std::hash<std::string>{}(n->bytes);
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::merged(Kind kind, std::vector<Formula> children) {
  if (kind != Kind::and_gate && kind != Kind::or_gate) return gate(kind, std::move(children));
  std::vector<Formula> flat;
  for (auto& c : children) {
    if (c.kind() == kind)
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    else
      flat.push_back(std::move(c));
  }
  return gate(kind, std::move(flat));
}

std::uint32_t variable_bound(const Formula& f) {
  std::unordered_map<const Node*, std::uint32_t> memo;
  std::function<std::uint32_t(const Formula&)> go = [&](const Formula& g) -> std::uint32_t {
    if (g.is_literal()) return g.var() + 1;
    if (g.is_constant()) return 0;
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    std::uint32_t best = 0;
    for (const auto& c : g.children()) best = std::max(best, go(c));
    memo.emplace(g.node(), best);
    return best;
  };
  return go(f);
}

bool evaluate(const Formula& f, std::span<const std::uint8_t> x) {
  switch (f.kind()) {
    case Kind::zero: return false;
    case Kind::one: return true;
    case Kind::pos:
    case Kind::neg:
      if (f.var() >= x.size()) throw PreconditionError("literal index outside the assignment");
      return (x[f.var()] != 0) == (f.kind() == Kind::pos);
    case Kind::and_gate:
      for (const auto& c : f.children())
        if (!evaluate(c, x)) return false;
      return true;
    case Kind::or_gate:
      for (const auto& c : f.children())
        if (evaluate(c, x)) return true;
      return false;
    case Kind::maj_gate: {
      std::size_t ones = 0;
      for (const auto& c : f.children()) ones += evaluate(c, x) ? 1 : 0;
      return 2 * ones > f.children().size();
    }
  }
  return false;
}

Formula act(const Perm& pi, const Formula& f) {
  std::unordered_map<const Node*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (g.is_constant()) return g;
    if (g.is_literal()) {
      if (g.var() >= pi.degree()) throw PreconditionError("literal index outside the permutation");
      return Formula::literal(pi(g.var()), g.kind() == Kind::pos);
    }
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    std::vector<Formula> kids;
    kids.reserve(g.children().size());
    for (const auto& c : g.children()) kids.push_back(go(c));
    auto out = Formula::gate(g.kind(), std::move(kids));
    memo.emplace(g.node(), out);
    return out;
  };
  return go(f);
}

Formula negate(const Formula& f) {
  std::unordered_map<const Node*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    switch (g.kind()) {
      case Kind::zero: return Formula::constant(true);
      case Kind::one: return Formula::constant(false);
      case Kind::pos: return Formula::literal(g.var(), false);
      case Kind::neg: return Formula::literal(g.var(), true);
      default: break;
    }
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    Kind dual = g.kind();
    if (g.kind() == Kind::and_gate) dual = Kind::or_gate;
    if (g.kind() == Kind::or_gate) dual = Kind::and_gate;
    if (g.kind() == Kind::maj_gate && g.children().size() % 2 == 0)
      throw PreconditionError("cannot negate MAJ of even arity");
    std::vector<Formula> kids;
    kids.reserve(g.children().size());
    for (const auto& c : g.children()) kids.push_back(go(c));
    auto out = Formula::gate(dual, std::move(kids));
    memo.emplace(g.node(), out);
    return out;
  };
  return go(f);
}

Formula flip_literal(const Formula& f, std::uint64_t ordinal) {
  if (ordinal >= f.size()) throw PreconditionError("literal ordinal out of range");
  std::function<Formula(const Formula&, std::uint64_t)> go = [&](const Formula& g, std::uint64_t k) -> Formula {
    if (g.is_literal()) return Formula::literal(g.var(), g.kind() != Kind::pos);
    std::vector<Formula> kids = g.children();
    for (auto& c : kids) {
      if (k < c.size()) {
        c = go(c, k);
        break;
      }
      k -= c.size();
    }
    return Formula::gate(g.kind(), std::move(kids));
  };
  return go(f, ordinal);
}

std::size_t distinct_nodes(const Formula& f) {
  std::unordered_set<const Node*> seen_ptr;
  std::unordered_set<std::string_view> seen_bytes;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    if (!seen_ptr.insert(g.node()).second) continue;
    seen_bytes.insert(g.bytes());
    for (const auto& c : g.children()) stack.push_back(c);
  }
  return seen_bytes.size();
}

}  // namespace wordform
