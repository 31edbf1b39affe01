#include "wordform/formula/compiled.hpp"

#include <string_view>
#include <unordered_map>

#include "wordform/error.hpp"

namespace wordform {

CompiledFormula::CompiledFormula(const Formula& f) {
  std::unordered_map<const Node*, std::uint32_t> by_ptr;
  std::unordered_map<std::string_view, std::uint32_t> by_bytes;
  // Iterative post-order so deep formulas do not exhaust the stack.
  struct Frame {
    Formula f;
    bool expanded;
  };
  std::vector<Frame> stack{{f, false}};
  while (!stack.empty()) {
    auto [g, expanded] = stack.back();
    stack.pop_back();
    if (by_ptr.count(g.node())) continue;
    if (auto it = by_bytes.find(g.bytes()); it != by_bytes.end()) {
      by_ptr.emplace(g.node(), it->second);
      continue;
    }
    if (!expanded && g.is_gate()) {
      stack.push_back({g, true});
      for (const auto& c : g.children()) stack.push_back({c, false});
      continue;
    }
    Op op{g.kind(), g.var(), static_cast<std::uint32_t>(kids_.size()), 0};
    if (g.is_literal()) variables_ = std::max<std::size_t>(variables_, g.var() + 1);
    for (const auto& c : g.children()) kids_.push_back(by_ptr.at(c.node()));
    op.count = static_cast<std::uint32_t>(g.children().size());
    const auto id = static_cast<std::uint32_t>(ops_.size());
    ops_.push_back(op);
    by_ptr.emplace(g.node(), id);
    by_bytes.emplace(g.bytes(), id);
  }
}

std::uint64_t CompiledFormula::eval64(std::span<const std::uint64_t> words, std::vector<std::uint64_t>& v) const {
  if (words.size() < variables_) throw PreconditionError("too few variable words");
  v.resize(ops_.size());
  for (std::size_t n = 0; n < ops_.size(); ++n) {
    const Op& op = ops_[n];
    const std::uint32_t* kid = kids_.data() + op.first;
    std::uint64_t r = 0;
    switch (op.kind) {
      case Kind::zero: r = 0; break;
      case Kind::one: r = ~std::uint64_t{0}; break;
      case Kind::pos: r = words[op.var]; break;
      case Kind::neg: r = ~words[op.var]; break;
      case Kind::and_gate:
        r = ~std::uint64_t{0};
        for (std::uint32_t c = 0; c < op.count; ++c) r &= v[kid[c]];
        break;
      case Kind::or_gate:
        for (std::uint32_t c = 0; c < op.count; ++c) r |= v[kid[c]];
        break;
      case Kind::maj_gate: {
        std::uint32_t counts[64] = {};
        for (std::uint32_t c = 0; c < op.count; ++c) {
          std::uint64_t w = v[kid[c]];
          while (w) {
            ++counts[__builtin_ctzll(w)];
            w &= w - 1;
          }
        }
        for (int l = 0; l < 64; ++l)
          if (2 * counts[l] > op.count) r |= std::uint64_t{1} << l;
        break;
      }
    }
    v[n] = r;
  }
  return v.back();
}

std::vector<std::uint8_t> truth_table(const Formula& f, const Domain& omega) {
  const CompiledFormula c(f);
  const auto m = omega.variables();
  if (c.variables() > m) throw PreconditionError("formula uses variables outside the domain");
  const std::size_t n = omega.size();
  std::vector<std::uint8_t> out(n);
  const auto batches = static_cast<std::int64_t>((n + 63) / 64);
#pragma omp parallel
  {
    std::vector<std::uint64_t> words(m), scratch;
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < batches; ++b) {
      const std::size_t first = static_cast<std::size_t>(b) * 64;
      const std::size_t count = std::min<std::size_t>(64, n - first);
      omega.fill_lanes(first, count, words);
      const std::uint64_t r = c.eval64(words, scratch);
      for (std::size_t l = 0; l < count; ++l) out[first + l] = static_cast<std::uint8_t>((r >> l) & 1);
    }
  }
  return out;
}

std::vector<std::uint8_t> truth_table_serial(const Formula& f, const Domain& omega) {
  std::vector<std::uint8_t> out(omega.size()), x(omega.variables());
  for (std::size_t j = 0; j < omega.size(); ++j) {
    omega.point(j, x);
    out[j] = evaluate(f, x) ? 1 : 0;
  }
  return out;
}

}  // namespace wordform
