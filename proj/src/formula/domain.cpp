#include "wordform/formula/domain.hpp"

#include <algorithm>

#include "wordform/error.hpp"

namespace wordform {

void Domain::fill_lanes(std::size_t first, std::size_t count, std::span<std::uint64_t> words) const {
  std::fill(words.begin(), words.end(), 0);
  std::vector<std::uint8_t> x(variables());
  for (std::size_t l = 0; l < count; ++l) {
    point(first + l, x);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) words[i] |= std::uint64_t{1} << l;
  }
}

std::vector<std::uint32_t> Domain::pullback(const Perm& pi) const {
  const auto m = variables();
  if (pi.degree() != m) throw PreconditionError("permutation degree differs from the variable count");
  std::vector<std::uint32_t> out(size());
  std::vector<std::uint8_t> x(m), y(m);
  for (std::size_t j = 0; j < size(); ++j) {
    point(j, x);
    for (std::size_t i = 0; i < m; ++i) y[i] = x[pi(static_cast<std::uint32_t>(i))];
    auto idx = find(y);
    if (!idx) throw PreconditionError("domain is not closed under the action");
    out[j] = static_cast<std::uint32_t>(*idx);
  }
  return out;
}

ListDomain::ListDomain(std::size_t variables, std::vector<std::vector<std::uint8_t>> points)
    : m_(variables), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != m_) throw PreconditionError("point has the wrong length");
}

void ListDomain::point(std::size_t j, std::span<std::uint8_t> x) const {
  std::copy(points_[j].begin(), points_[j].end(), x.begin());
}

std::optional<std::size_t> ListDomain::find(std::span<const std::uint8_t> x) const {
  for (std::size_t j = 0; j < points_.size(); ++j)
    if (std::equal(x.begin(), x.end(), points_[j].begin(), points_[j].end())) return j;
  return std::nullopt;
}

CubeDomain::CubeDomain(std::size_t variables) : m_(variables) {
  if (m_ > 24) throw PreconditionError("cube domain needs at most 24 variables");
}

void CubeDomain::point(std::size_t j, std::span<std::uint8_t> x) const {
  for (std::size_t i = 0; i < m_; ++i) x[i] = static_cast<std::uint8_t>((j >> i) & 1);
}

std::optional<std::size_t> CubeDomain::find(std::span<const std::uint8_t> x) const {
  std::size_t j = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    if (x[i] > 1) return std::nullopt;
    j |= std::size_t{x[i]} << i;
  }
  return j;
}

}  // namespace wordform
