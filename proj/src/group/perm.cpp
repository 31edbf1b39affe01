#include "wordform/group/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "wordform/error.hpp"

namespace wordform {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in cycle notation: " + std::string(text));
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) throw ParseError("point out of range in: " + std::string(text));
        ++pos;
      }
      if (value == 0) throw ParseError("points are numbered from 1: " + std::string(text));
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    for (auto x : cycle) {
      if (used[x]) throw ParseError("point repeated across cycles: " + std::string(text));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (auto y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    bool first = true;
    for (auto y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << (y + 1);
      first = false;
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw PreconditionError("composing permutations of different degree");
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p.images_[q.images_[x]];
  Perm r;
  r.images_ = std::move(images);
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wordform
