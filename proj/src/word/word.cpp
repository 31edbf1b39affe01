#include "wordform/word/word.hpp"

#include <algorithm>
#include <random>

#include "wordform/error.hpp"
#include "wordform/word/var_action.hpp"

namespace wordform {

std::vector<std::uint8_t> perm_matrix(const Perm& g) {
  const auto n = g.degree();
  std::vector<std::uint8_t> m(n * n, 0);
  for (std::uint32_t b = 0; b < n; ++b) m[g(b) * n + b] = 1;
  return m;
}

bool word_value(const PermGroup& g, std::span<const Elem> tuple, std::uint32_t u0, std::uint32_t uk) {
  std::uint32_t x = uk;
  for (std::size_t i = tuple.size(); i-- > 0;) x = g.apply(tuple[i], x);
  return x == u0;
}

bool word_value_matrix(const PermGroup& g, std::span<const Elem> tuple, std::uint32_t u0, std::uint32_t uk) {
  const auto n = g.degree();
  std::vector<std::uint32_t> acc(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) acc[a * n + a] = 1;
  for (auto e : tuple) {
    const auto m = perm_matrix(g.element(e));
    std::vector<std::uint32_t> next(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b) next[a * n + b] += acc[a * n + c] * m[c * n + b];
    acc = std::move(next);
  }
  return acc[u0 * n + uk] != 0;
}

WordDomain::WordDomain(std::shared_ptr<const PermGroup> g, std::size_t k, std::size_t limit)
    : g_(std::move(g)), k_(k), n_(g_->degree()) {
  if (k_ < 1) throw PreconditionError("k must be positive");
  std::size_t s = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (s > limit / g_->order()) throw CeilingExceeded("domain size |G|^k", limit);
    s *= g_->order();
  }
  size_ = s;
}

WordDomain WordDomain::sampled(std::shared_ptr<const PermGroup> g, std::size_t k, std::size_t count,
                               std::uint64_t seed) {
  if (k < 1 || count < 1) throw PreconditionError("k and the sample count must be positive");
  WordDomain d;
  d.g_ = std::move(g);
  d.k_ = k;
  d.n_ = d.g_->degree();
  d.size_ = count;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(d.g_->order() - 1));
  d.samples_.resize(count * k);
  for (auto& e : d.samples_) e = pick(rng);
  return d;
}

void WordDomain::tuple(std::size_t j, std::span<Elem> out) const {
  if (!samples_.empty()) {
    std::copy_n(samples_.begin() + static_cast<std::ptrdiff_t>(j * k_), k_, out.begin());
    return;
  }
  const auto order = g_->order();
  for (std::size_t i = 0; i < k_; ++i) {
    out[i] = static_cast<Elem>(j % order);
    j /= order;
  }
}

void WordDomain::point(std::size_t j, std::span<std::uint8_t> x) const {
  std::fill(x.begin(), x.end(), 0);
  std::vector<Elem> t(k_);
  tuple(j, t);
  for (std::size_t i = 0; i < k_; ++i) {
    const auto& h = g_->element(t[i]);
    for (std::uint32_t b = 0; b < n_; ++b) x[var_index(n_, i, h(b), b)] = 1;
  }
}

std::optional<std::size_t> WordDomain::find(std::span<const std::uint8_t> x) const {
  if (x.size() != variables()) return std::nullopt;
  std::vector<Elem> t(k_);
  std::vector<std::uint32_t> images(n_);
  for (std::size_t i = 0; i < k_; ++i) {
    std::vector<bool> hit(n_, false);
    for (std::uint32_t b = 0; b < n_; ++b) {
      int found = -1;
      for (std::uint32_t a = 0; a < n_; ++a) {
        auto v = x[var_index(n_, i, a, b)];
        if (v > 1) return std::nullopt;
        if (v == 1) {
          if (found >= 0) return std::nullopt;
          found = static_cast<int>(a);
        }
      }
      if (found < 0 || hit[found]) return std::nullopt;
      hit[found] = true;
      images[b] = static_cast<std::uint32_t>(found);
    }
    auto e = g_->index_of(Perm(images));
    if (!e) return std::nullopt;
    t[i] = *e;
  }
  if (samples_.empty()) {
    std::size_t j = 0;
    for (std::size_t i = k_; i-- > 0;) j = j * g_->order() + t[i];
    return j;
  }
  for (std::size_t j = 0; j < size_; ++j)
    if (std::equal(t.begin(), t.end(), samples_.begin() + static_cast<std::ptrdiff_t>(j * k_))) return j;
  return std::nullopt;
}

void WordDomain::fill_lanes(std::size_t first, std::size_t count, std::span<std::uint64_t> words) const {
  std::fill(words.begin(), words.end(), 0);
  std::vector<Elem> t(k_);
  for (std::size_t l = 0; l < count; ++l) {
    tuple(first + l, t);
    const std::uint64_t bit = std::uint64_t{1} << l;
    for (std::size_t i = 0; i < k_; ++i) {
      const auto& h = g_->element(t[i]);
      for (std::uint32_t b = 0; b < n_; ++b) words[var_index(n_, i, h(b), b)] |= bit;
    }
  }
}

std::vector<std::uint32_t> WordDomain::pullback(const Perm& pi) const {
  if (pi.degree() != variables()) throw PreconditionError("permutation degree differs from the variable count");
  if (!samples_.empty()) return Domain::pullback(pi);
  // Recover σ_i, τ_i from pi(i,a,0) and pi(i,0,b), then confirm pi is that block map.
  std::vector<std::vector<Elem>> digit_map(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    std::vector<std::uint32_t> sigma(n_), tau(n_);
    for (std::uint32_t a = 0; a < n_; ++a) {
      auto v = pi(var_index(n_, i, a, 0));
      if (v / (n_ * n_) != i) return Domain::pullback(pi);
      sigma[a] = static_cast<std::uint32_t>((v % (n_ * n_)) / n_);
    }
    for (std::uint32_t b = 0; b < n_; ++b) tau[b] = static_cast<std::uint32_t>(pi(var_index(n_, i, 0, b)) % n_);
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        if (pi(var_index(n_, i, a, b)) != var_index(n_, i, sigma[a], tau[b])) return Domain::pullback(pi);
    const Perm s(sigma), t(tau);
    const Perm s_inv = s.inverse();
    digit_map[i].resize(g_->order());
    for (Elem h = 0; h < g_->order(); ++h) {
      auto e = g_->index_of(s_inv * g_->element(h) * t);
      if (!e) throw PreconditionError("domain is not closed under the action");
      digit_map[i][h] = *e;
    }
  }
  std::vector<std::uint32_t> out(size_);
  const auto order = g_->order();
  for (std::size_t j = 0; j < size_; ++j) {
    std::size_t rest = j, code = 0, place = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      code += place * digit_map[i][rest % order];
      rest /= order;
      place *= order;
    }
    out[j] = static_cast<std::uint32_t>(code);
  }
  return out;
}

std::vector<std::uint8_t> word_table(const WordDomain& omega, std::uint32_t u0, std::uint32_t uk) {
  std::vector<std::uint8_t> out(omega.size());
  const auto n = static_cast<std::int64_t>(omega.size());
#pragma omp parallel
  {
    std::vector<Elem> t(omega.k());
#pragma omp for schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
      omega.tuple(static_cast<std::size_t>(j), t);
      out[j] = word_value(omega.group(), t, u0, uk) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace wordform
