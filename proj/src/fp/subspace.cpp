#include "wordform/fp/subspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wordform/error.hpp"

namespace wordform {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t fp_code(std::span<const std::uint32_t> v, std::uint32_t p) {
  std::uint64_t c = 0;
  for (auto x : v) c = c * p + x;
  return c;
}

FpVec fp_decode(std::uint64_t code, std::uint32_t p, std::size_t k) {
  FpVec v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::size_t weight(std::span<const std::uint32_t> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

std::vector<std::size_t> support(std::span<const std::uint32_t> v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.push_back(i);
  return s;
}

std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + std::uint64_t{a[i]} * b[i]) % p;
  return static_cast<std::uint32_t>(s);
}

std::string format_vector(std::span<const std::uint32_t> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

Subspace Subspace::span(std::uint32_t p, std::size_t k, const std::vector<FpVec>& vectors) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  Subspace s(p, k);
  for (const auto& v : vectors) {
    if (v.size() != k) throw PreconditionError("vector has the wrong length");
    FpVec w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = v[i] % p;
    s.rows_.push_back(std::move(w));
  }
  s.reduce();
  return s;
}

Subspace Subspace::zero(std::uint32_t p, std::size_t k) { return span(p, k, {}); }

Subspace Subspace::full(std::uint32_t p, std::size_t k) {
  std::vector<FpVec> e(k, FpVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) e[i][i] = 1;
  return span(p, k, e);
}

void Subspace::reduce() {
  std::vector<FpVec> m = std::move(rows_);
  rows_.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < k_ && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const auto inv = inverse_mod(m[r][c], p_);
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < k_; ++j) m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p_ - f) * m[r][j]) % p_);
    }
    ++r;
  }
  m.resize(r);
  rows_ = std::move(m);
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != k_) return false;
  FpVec w(v.begin(), v.end());
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (w[c] == 0) continue;
    const std::uint64_t f = w[c];
    for (std::size_t j = 0; j < k_; ++j) w[j] = static_cast<std::uint32_t>((w[j] + (p_ - f) * row[j]) % p_);
  }
  return weight(w) == 0;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& r : rows_)
    if (!other.contains(r)) return false;
  return true;
}

std::vector<FpVec> Subspace::members() const {
  std::vector<std::uint64_t> codes;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= p_;
  codes.reserve(count);
  FpVec coef(dim(), 0), v(k_);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < k_; ++j) v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{coef[i]} * rows_[i][j]) % p_);
    codes.push_back(fp_code(v, p_));
    for (std::size_t i = 0; i < dim() && ++coef[i] == p_; ++i) coef[i] = 0;
  }
  std::sort(codes.begin(), codes.end());
  std::vector<FpVec> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(fp_decode(c, p_, k_));
  return out;
}

std::vector<std::uint64_t> Subspace::key() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows_) out.push_back(fp_code(r, p_));
  return out;
}

Subspace Subspace::perp() const {
  // Free columns of the RREF give the null space basis.
  std::vector<std::size_t> pivots;
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<FpVec> basis;
  for (std::size_t f = 0; f < k_; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    FpVec v(k_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots[r]] = (p_ - rows_[r][f]) % p_;
    basis.push_back(std::move(v));
  }
  return span(p_, k_, basis);
}

Subspace Subspace::plus(const Subspace& other) const {
  auto rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return span(p_, k_, rows);
}

Subspace Subspace::plus(const FpVec& v) const {
  auto rows = rows_;
  rows.push_back(v);
  return span(p_, k_, rows);
}

Subspace Subspace::meet(const Subspace& other) const { return perp().plus(other.perp()).perp(); }

Subspace Subspace::project(std::span<const std::size_t> coords) const {
  std::vector<FpVec> rows;
  for (const auto& r : rows_) {
    FpVec v;
    for (auto c : coords) v.push_back(r[c]);
    rows.push_back(std::move(v));
  }
  return span(p_, coords.size(), rows);
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < rows_.size(); ++i) out << (i ? " " : "") << format_vector(rows_[i]);
  out << '>';
  return out.str();
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t k, std::size_t limit) {
  std::map<std::vector<std::uint64_t>, Subspace> seen;
  std::vector<Subspace> frontier{Subspace::zero(p, k)};
  seen.emplace(frontier[0].key(), frontier[0]);
  const auto all = Subspace::full(p, k).members();
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      for (const auto& v : all) {
        if (s.contains(v)) continue;
        auto t = s.plus(v);
        if (seen.emplace(t.key(), t).second) {
          if (seen.size() > limit) throw CeilingExceeded("subspace count", limit);
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  for (auto& [key, s] : seen) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.key() < b.key();
  });
  return out;
}

}  // namespace wordform
