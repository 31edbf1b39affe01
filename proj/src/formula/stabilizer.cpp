#include "wordform/formula/stabilizer.hpp"

#include "wordform/error.hpp"
#include "wordform/formula/compiled.hpp"

namespace wordform {

TableAction::TableAction(const FiniteGroup& q, std::vector<Perm> table) : q_(q), table_(std::move(table)) {
  if (table_.size() != q.order()) throw PreconditionError("action table must list every element");
  m_ = table_.empty() ? 0 : table_[0].degree();
  for (const auto& p : table_)
    if (p.degree() != m_) throw PreconditionError("action permutations differ in degree");
}

bool is_invariant(const Formula& f, std::span<const Perm> generators) {
  for (const auto& g : generators)
    if (!(act(g, f) == f)) return false;
  return true;
}

Subgroup syntactic_stabilizer(const Formula& f, const VarAction& action) {
  return search_subgroup(action.group(), [&](Elem q) { return act(action.perm(q), f) == f; });
}

Subgroup syntactic_stabilizer_serial(const Formula& f, const VarAction& action) {
  const auto& g = action.group();
  std::vector<bool> mask(g.order(), false);
  for (Elem q = 0; q < g.order(); ++q) mask[q] = act(action.perm(q), f) == f;
  return Subgroup::from_closed_mask(g, std::move(mask));
}

namespace {

template <typename T>
Subgroup stabilizer_of_values(std::span<const T> values, const VarAction& action, const Domain& omega) {
  if (values.size() != omega.size()) throw PreconditionError("value table does not match the domain");
  const auto n = static_cast<std::int64_t>(omega.size());
  return search_subgroup(action.group(), [&](Elem q) {
    const auto back = omega.pullback(action.perm(q));
    bool same = true;
#pragma omp parallel for reduction(&& : same) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) same = same && values[back[j]] == values[j];
    return same;
  });
}

}  // namespace

Subgroup function_stabilizer(std::span<const std::uint8_t> values, const VarAction& action, const Domain& omega) {
  return stabilizer_of_values(values, action, omega);
}

Subgroup function_stabilizer(std::span<const std::uint32_t> values, const VarAction& action, const Domain& omega) {
  return stabilizer_of_values(values, action, omega);
}

Subgroup semantic_stabilizer(const Formula& f, const VarAction& action, const Domain& omega) {
  const auto values = truth_table(f, omega);
  return function_stabilizer(std::span<const std::uint8_t>(values), action, omega);
}

Subgroup semantic_stabilizer_serial(const Formula& f, const VarAction& action, const Domain& omega) {
  const auto values = truth_table_serial(f, omega);
  const auto& g = action.group();
  std::vector<bool> mask(g.order(), false);
  for (Elem q = 0; q < g.order(); ++q) {
    const auto back = omega.Domain::pullback(action.perm(q));
    bool same = true;
    for (std::size_t j = 0; j < values.size() && same; ++j) same = values[back[j]] == values[j];
    mask[q] = same;
  }
  return Subgroup::from_closed_mask(g, std::move(mask));
}

}  // namespace wordform

namespace wordform {

PullbackTable::PullbackTable(const VarAction& action, const Domain& omega, std::size_t limit)
    : q_(action.group()), points_(omega.size()) {
  const auto n = q_.order();
  if (points_ != 0 && n > limit / points_) throw CeilingExceeded("pullback table size", limit);
  table_.resize(n * points_);
  for (Elem q = 0; q < n; ++q) {
    const auto back = omega.pullback(action.perm(q));
    std::copy(back.begin(), back.end(), table_.begin() + static_cast<std::ptrdiff_t>(q * points_));
  }
}

Subgroup function_stabilizer(std::span<const std::uint32_t> values, const PullbackTable& table,
                             const Subgroup& known) {
  if (values.size() != table.points()) throw PreconditionError("value table does not match the domain");
  return search_subgroup(
      table.group(),
      [&](Elem q) {
        const auto back = table(q);
        for (std::size_t j = 0; j < values.size(); ++j)
          if (values[back[j]] != values[j]) return false;
        return true;
      },
      known);
}

std::vector<std::uint32_t> orbit_ids(const PullbackTable& table, const Subgroup& s) {
  const auto n = table.points();
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t j = 0; j < n; ++j) parent[j] = j;
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto g : s.generators()) {
    const auto back = table(g);
    for (std::uint32_t j = 0; j < n; ++j) {
      auto a = root(j), b = root(back[j]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> id(n), label(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t j = 0; j < n; ++j) {
    auto r = root(j);
    if (label[r] == UINT32_MAX) label[r] = next++;
    id[j] = label[r];
  }
  return id;
}

}  // namespace wordform
