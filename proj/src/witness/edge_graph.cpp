#include "wordform/witness/edge_graph.hpp"

#include <algorithm>
#include <array>

#include "wordform/error.hpp"

namespace wordform {

std::vector<std::pair<std::size_t, std::size_t>> EdgeGraph::components() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t first = 0;
  for (std::size_t v = 0; v < k; ++v) {
    if (v + 1 == k || !edges[v]) {
      out.emplace_back(first, v);
      first = v + 1;
    }
  }
  return out;
}

std::size_t EdgeGraph::largest() const {
  std::size_t best = 0;
  for (auto [a, b] : components()) best = std::max(best, b - a + 1);
  return best;
}

EdgeGraph EdgeGraph::meet(const EdgeGraph& other) const {
  if (other.k != k) throw PreconditionError("edge graphs of different sizes");
  EdgeGraph out{k, edges};
  for (std::size_t e = 0; e < edges.size(); ++e) out.edges[e] = edges[e] && other.edges[e];
  return out;
}

std::size_t EdgeGraph::edge_count() const { return static_cast<std::size_t>(std::count(edges.begin(), edges.end(), true)); }

bool EdgeGraph::subset_of(const EdgeGraph& other) const {
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e] && !other.edges[e]) return false;
  return true;
}

Subgroup diagonal(const TupleGroup& g2) {
  if (g2.arity() != 2 || g2.constraint() != Constraint::full) throw PreconditionError("diagonal needs a full square");
  std::vector<bool> mask(g2.order(), false);
  for (Elem a = 0; a < g2.base().order(); ++a) {
    std::array<Elem, 2> t{a, a};
    mask[*g2.encode(t)] = true;
  }
  return Subgroup::from_closed_mask(g2, std::move(mask));
}

bool is_diagonal(const TupleGroup& g2, const Subgroup& h) {
  if (h.size() != g2.base().order()) return false;
  for (auto e : h.elements())
    if (g2.coordinate(e, 0) != g2.coordinate(e, 1)) return false;
  return true;
}

EdgeGraph edge_set(const TupleGroup& q, const Subgroup& h) {
  if (q.arity() % 2 != 0 || q.arity() < 2) throw PreconditionError("edge set needs arity 2k");
  const std::size_t k = q.arity() / 2;
  const Elem one = q.base().identity();
  // Per edge: restricted elements seen, and whether all of them were diagonal.
  std::vector<std::vector<bool>> seen(k - 1, std::vector<bool>(q.base().order(), false));
  std::vector<std::size_t> count(k - 1, 0);
  std::vector<bool> diagonal_only(k - 1, true);
  for (auto e : h.elements()) {
    const auto t = q.tuple(e);
    std::size_t first = t.size(), last = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[j] != one) {
        first = std::min(first, j);
        last = j;
      }
    if (first == t.size()) continue;  // the identity
    for (std::size_t edge = 0; edge + 1 < k; ++edge) {
      const auto a = 2 * edge + 1, b = 2 * edge + 2;
      if (first < a || last > b) continue;
      if (t[a] != t[b]) {
        diagonal_only[edge] = false;
      } else if (!seen[edge][t[a]]) {
        seen[edge][t[a]] = true;
        ++count[edge];
      }
    }
  }
  EdgeGraph g{k, std::vector<bool>(k - 1, false)};
  for (std::size_t edge = 0; edge + 1 < k; ++edge)
    g.edges[edge] = diagonal_only[edge] && count[edge] + 1 == q.base().order();
  return g;
}

std::size_t mu_nonabelian(const TupleGroup& q, const Subgroup& h, const Subgroup& k, bool k_is_q) {
  if (k_is_q) return 0;
  return edge_set(q, h).meet(edge_set(q, k)).largest();
}

std::size_t mu_nonabelian(const TupleGroup& q, const Subgroup& h, const Subgroup& k) {
  return mu_nonabelian(q, h, k, k.size() == q.order());
}

}  // namespace wordform
