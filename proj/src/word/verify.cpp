#include "wordform/word/verify.hpp"

#include "wordform/formula/compiled.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/word.hpp"

namespace wordform {

namespace {

bool fits(const PermGroup& g, std::size_t k, std::size_t limit) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (s > limit / g.order()) return false;
    s *= g.order();
  }
  return true;
}

WordDomain make_domain(std::shared_ptr<const PermGroup> g, std::size_t k, const VerifyOptions& o) {
  if (o.force_exhaustive || fits(*g, k, o.exhaustive_limit)) return WordDomain(g, k, SIZE_MAX);
  return WordDomain::sampled(g, k, o.samples, o.seed);
}

}  // namespace

VerifyReport verify_construction(const Formula& f, std::shared_ptr<const PermGroup> g, std::size_t k,
                                 std::uint32_t u0, std::uint32_t uk, std::optional<std::uint64_t> predicted_size,
                                 std::optional<std::uint32_t> predicted_depth, const VerifyOptions& options) {
  VerifyReport r;
  const WordDomain omega = make_domain(g, k, options);
  r.exhaustive = omega.exhaustive();
  r.points = omega.size();
  const auto got = truth_table(f, omega);
  const auto want = word_table(omega, u0, uk);
  for (std::size_t j = 0; j < got.size(); ++j) r.mismatches += got[j] != want[j];
  r.semantic_match = r.mismatches == 0;
  const auto gens = shifted_diagonal_generators(*g, k);
  r.generators_checked = gens.size();
  r.invariant = is_invariant(f, gens);
  r.size = f.size();
  r.depth = f.depth();
  r.predicted_size = predicted_size;
  r.predicted_depth = predicted_depth;
  r.size_match = !predicted_size || *predicted_size == r.size;
  r.depth_match = !predicted_depth || *predicted_depth == r.depth;
  return r;
}

std::size_t count_mismatches_serial(const Formula& f, std::shared_ptr<const PermGroup> g, std::size_t k,
                                    std::uint32_t u0, std::uint32_t uk, const VerifyOptions& options) {
  const WordDomain omega = make_domain(g, k, options);
  std::vector<std::uint8_t> x(omega.variables());
  std::vector<Elem> t(k);
  std::size_t bad = 0;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    omega.point(j, x);
    omega.tuple(j, t);
    bad += evaluate(f, x) != word_value(*g, t, u0, uk);
  }
  return bad;
}

}  // namespace wordform
