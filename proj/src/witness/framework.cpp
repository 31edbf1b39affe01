#include "wordform/witness/framework.hpp"

#include <cmath>

#include "wordform/fp/witness.hpp"
#include "wordform/fp/zq.hpp"
#include "wordform/group/lattice.hpp"
#include "wordform/group/params.hpp"
#include "wordform/witness/edge_graph.hpp"

namespace wordform {

MuModel mu_model(const WordAction& action, const Ceilings& ceilings) {
  const auto& q = action.tuples();
  const auto& g = action.base();
  if (action.kind() == ActionKind::abelian_lift) {
    const auto p = static_cast<std::uint32_t>(g.order());
    if (!is_prime(p) || g.degree() != p) throw PreconditionError("abelian model needs C_p on p points");
    return {"fp", p, [&q, p](const Subgroup& h, const Subgroup& k) -> std::size_t {
              if (k.size() == q.order()) return 0;
              return mu_p(tuple_subspace(q, h, p));
            }};
  }
  if (action.kind() == ActionKind::left_right) {
    auto lattice = enumerate_subgroups(g, ceilings);
    if (g.is_abelian() || !is_simple(g, Subgroup::whole(g), lattice))
      throw PreconditionError("edge model needs a nonabelian simple G");
    const auto n = min_faithful_degree(g, Subgroup::whole(g), lattice);
    return {"edges", n, [&q](const Subgroup& h, const Subgroup& k) { return mu_nonabelian(q, h, k); }};
  }
  throw PreconditionError("no mu model for action " + to_string(action.kind()));
}

long double mu_bound(std::size_t c, std::size_t mu, std::size_t d) {
  if (mu == 0 || d == 0) return 0;
  const long double dd = static_cast<long double>(d);
  return std::pow(static_cast<long double>(c), dd * (std::pow(static_cast<long double>(mu), 1.0L / dd) - 1.0L));
}

FrameworkReport framework_check(const Formula& f, const WordAction& action, const Domain& omega, std::size_t d,
                                const Ceilings& ceilings) {
  const auto model = mu_model(action, ceilings);
  const auto h = syntactic_stabilizer(f, action);
  const auto k = semantic_stabilizer(f, action, omega);
  FrameworkReport r;
  r.model = model.name;
  r.size = f.size();
  r.depth = f.depth();
  r.d = d;
  r.h_order = h.size();
  r.k_order = k.size();
  r.k_is_q = k.size() == action.group().order();
  r.mu = model.mu(h, k);
  r.c = model.c;
  r.bound = mu_bound(r.c, r.mu, d);
  r.bound_at_depth = mu_bound(r.c, r.mu, r.depth);
  // Exact comparison up to rounding of the real power.
  r.pass = static_cast<long double>(r.size) >= r.bound * (1.0L - 1e-12L);
  return r;
}

Json to_json(const FrameworkReport& r) {
  Json j;
  j["model"] = r.model;
  j["size"] = r.size;
  j["depth"] = r.depth;
  j["d"] = r.d;
  j["syntactic_order"] = r.h_order;
  j["semantic_order"] = r.k_order;
  j["semantic_is_q"] = r.k_is_q;
  j["mu"] = r.mu;
  j["c"] = r.c;
  j["bound"] = static_cast<double>(r.bound);
  j["bound_at_depth"] = static_cast<double>(r.bound_at_depth);
  j["pass"] = r.pass;
  return j;
}

}  // namespace wordform
