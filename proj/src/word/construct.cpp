#include "wordform/word/construct.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "wordform/error.hpp"
#include "wordform/word/var_action.hpp"

namespace wordform {

std::string to_string(Polarity p) { return p == Polarity::sigma ? "sigma" : "pi"; }

Polarity polarity_from_string(const std::string& name) {
  if (name == "sigma") return Polarity::sigma;
  if (name == "pi") return Polarity::pi;
  throw ParseError("unknown polarity: " + name);
}

namespace {

// r^d, or nullopt if it exceeds limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t r, std::uint64_t d, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (r != 0 && v > limit / r) return std::nullopt;
    v *= r;
  }
  return v;
}

class Builder {
 public:
  Builder(std::size_t n, bool exact) : n_(n), exact_(exact) {}

  // Entry (a, b) of the product of blocks lo..hi-1 as a depth ≤ d+1 formula.
  Formula word(std::size_t lo, std::size_t hi, std::uint32_t a, std::uint32_t b, std::size_t d, Polarity pol) {
    const auto key = std::make_tuple(lo, hi, a, b, d, pol == Polarity::sigma);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula f = build(lo, hi, a, b, d, pol);
    memo_.emplace(key, f);
    return f;
  }

  Formula negated(std::size_t lo, std::size_t hi, std::uint32_t a, std::uint32_t b, std::size_t d, Polarity pol) {
    const auto key = std::make_tuple(lo, hi, a, b, d, pol == Polarity::sigma);
    if (auto it = neg_memo_.find(key); it != neg_memo_.end()) return it->second;
    Formula f = negate(word(lo, hi, a, b, d, pol));
    neg_memo_.emplace(key, f);
    return f;
  }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::uint32_t, std::uint32_t, std::size_t, bool>;

  Formula literal(std::size_t i, std::uint32_t a, std::uint32_t b, bool positive = true) const {
    return Formula::literal(var_index(n_, i, a, b), positive);
  }

  // Calls visit(u) for every assignment of values in [n] to `count` boundary points.
  template <typename F>
  void for_each_boundary(std::size_t count, F&& visit) const {
    std::vector<std::uint32_t> u(count, 0);
    for (;;) {
      visit(u);
      std::size_t j = 0;
      while (j < count && ++u[j] == n_) u[j++] = 0;
      if (j == count) return;
    }
  }

  Formula build(std::size_t lo, std::size_t hi, std::uint32_t a, std::uint32_t b, std::size_t d, Polarity pol) {
    const std::size_t len = hi - lo;
    if (len == 1) return literal(lo, a, b);
    if (d == 1) {
      std::vector<Formula> terms;
      for_each_boundary(len - 1, [&](const std::vector<std::uint32_t>& u) {
        std::vector<Formula> lits;
        for (std::size_t j = 0; j < len; ++j) {
          const auto from = j == 0 ? a : u[j - 1];
          const auto to = j + 1 == len ? b : u[j];
          const bool last = j + 1 == len;
          lits.push_back(literal(lo + j, from, to, pol == Polarity::sigma || last));
        }
        terms.push_back(Formula::gate(pol == Polarity::sigma ? Kind::and_gate : Kind::or_gate, std::move(lits)));
      });
      return Formula::gate(pol == Polarity::sigma ? Kind::or_gate : Kind::and_gate, std::move(terms));
    }
    std::uint64_t t = ceil_root(len, d);
    if (exact_ && !exact_root(len, d)) throw PreconditionError("k^{1/d} is not an integer");
    // First r blocks have length q + 1, the rest q.
    const std::size_t q = len / t, r = len % t;
    std::vector<std::size_t> cut{lo};
    for (std::size_t j = 0; j < t; ++j) cut.push_back(cut.back() + q + (j < r ? 1 : 0));
    std::vector<Formula> terms;
    for_each_boundary(t - 1, [&](const std::vector<std::uint32_t>& u) {
      std::vector<Formula> parts;
      for (std::size_t j = 0; j < t; ++j) {
        const auto from = j == 0 ? a : u[j - 1];
        const auto to = j + 1 == t ? b : u[j];
        if (pol == Polarity::sigma)
          parts.push_back(word(cut[j], cut[j + 1], from, to, d - 1, Polarity::pi));
        else if (j + 1 < t)
          parts.push_back(negated(cut[j], cut[j + 1], from, to, d - 1, Polarity::pi));
        else
          parts.push_back(word(cut[j], cut[j + 1], from, to, d - 1, Polarity::sigma));
      }
      terms.push_back(Formula::merged(pol == Polarity::sigma ? Kind::and_gate : Kind::or_gate, std::move(parts)));
    });
    return Formula::merged(pol == Polarity::sigma ? Kind::or_gate : Kind::and_gate, std::move(terms));
  }

  std::size_t n_;
  bool exact_;
  std::map<Key, Formula> memo_, neg_memo_;
};

void check(const ConstructionParams& p) {
  if (p.n < 1 || p.k < 1 || p.d < 1) throw PreconditionError("n, k and d must be positive");
  if (p.u0 >= p.n || p.uk >= p.n) throw PreconditionError("boundary point outside [n]");
}

}  // namespace

std::optional<std::uint64_t> exact_root(std::uint64_t k, std::uint64_t d) {
  const auto r = ceil_root(k, d);
  auto v = bounded_power(r, d, k);
  if (v && *v == k) return r;
  return std::nullopt;
}

std::uint64_t ceil_root(std::uint64_t k, std::uint64_t d) {
  if (d == 0) throw PreconditionError("root of order zero");
  std::uint64_t r = 1;
  while (true) {
    auto v = bounded_power(r, d, k);
    if (!v || *v >= k) return r;
    ++r;
  }
}

Formula build_exact(const ConstructionParams& p) {
  check(p);
  if (!exact_root(p.k, p.d)) throw PreconditionError("k^{1/d} is not an integer; use build_general");
  Builder b(p.n, true);
  return b.word(0, p.k, p.u0, p.uk, p.d, p.polarity);
}

Formula build_general(const ConstructionParams& p) {
  check(p);
  Builder b(p.n, false);
  return b.word(0, p.k, p.u0, p.uk, p.d, p.polarity);
}

std::uint64_t predicted_size(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  auto r = exact_root(k, d);
  if (!r) throw PreconditionError("k^{1/d} is not an integer");
  auto v = bounded_power(n, d * (*r - 1), UINT64_MAX / k);
  if (!v) throw PreconditionError("predicted size overflows");
  return k * *v;
}

long double size_envelope(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  const auto t = ceil_root(k, d);
  return static_cast<long double>(k) *
         std::pow(static_cast<long double>(n), static_cast<long double>(d * (t - 1) + d));
}

}  // namespace wordform
