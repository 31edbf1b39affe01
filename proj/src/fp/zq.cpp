#include "wordform/fp/zq.hpp"

#include <cmath>
#include <string>

#include "wordform/fp/witness.hpp"

namespace wordform {

PrimePower prime_power_of(std::uint64_t q) {
  if (q < 2) throw PreconditionError("q must be a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  PrimePower out{p, 0};
  while (q % p == 0) {
    q /= p;
    ++out.t;
  }
  if (q != 1) throw PreconditionError("q must be a prime power");
  return out;
}

ZqGroup::ZqGroup(std::uint32_t q, std::size_t k, const Ceilings& ceilings) : q_(q), k_(k) {
  prime_power_of(q);
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > ceilings.elements / q) throw CeilingExceeded("group order", ceilings.elements);
    n *= q;
  }
  order_ = n;
}

Elem ZqGroup::multiply(Elem a, Elem b) const {
  std::uint64_t out = 0, place = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    out += place * ((a % q_ + b % q_) % q_);
    a /= q_;
    b /= q_;
    place *= q_;
  }
  return static_cast<Elem>(out);
}

Elem ZqGroup::inverse(Elem a) const {
  std::uint64_t out = 0, place = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    out += place * ((q_ - a % q_) % q_);
    a /= q_;
    place *= q_;
  }
  return static_cast<Elem>(out);
}

std::vector<Elem> ZqGroup::generators() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < k_; ++i) {
    FpVec e(k_, 0);
    e[i] = 1;
    out.push_back(encode(e));
  }
  return out;
}

Subspace vh_extract(const ZqGroup& g, const Subgroup& h) {
  const auto [p, t] = prime_power_of(g.q());
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i + 1 < t; ++i) scale *= p;
  std::vector<FpVec> rows;
  for (auto e : h.elements()) {
    auto v = g.digits(e);
    bool in = true;
    for (auto& x : v) {
      if (x % scale != 0) {
        in = false;
        break;
      }
      x /= scale;
    }
    if (in) rows.push_back(std::move(v));
  }
  return Subspace::span(p, g.k(), rows);
}

long double prime_power_bound_value(std::size_t order, std::uint32_t q, std::size_t mu, std::size_t dim_vh,
                                    std::size_t d) {
  if (d < 1) throw PreconditionError("prime_power_bound needs d >= 1");
  const long double ld = static_cast<long double>(d);
  const long double exponent = ld * (std::pow(static_cast<long double>(mu), 1.0L / ld) - 1.0L);
  return static_cast<long double>(order) * std::pow(static_cast<long double>(q), exponent) /
         std::pow(static_cast<long double>(q), static_cast<long double>(dim_vh));
}

PrimePowerBound prime_power_bound(const ZqGroup& g, const Subgroup& h, const Subspace& w, std::size_t d) {
  PrimePowerBound b;
  const auto vh = vh_extract(g, h);
  b.order = h.size();
  b.dim_vh = vh.dim();
  b.mu = min_weight_gap(vh, w).weight;
  b.value = prime_power_bound_value(b.order, g.q(), b.mu, b.dim_vh, d);
  return b;
}

std::vector<std::uint32_t> cyclic_exponents(const PermGroup& cq) {
  const auto q = static_cast<std::uint32_t>(cq.degree());
  if (cq.order() != q) throw PreconditionError("not the cyclic group of its degree");
  std::string cycle = "(";
  for (std::uint32_t i = 1; i <= q; ++i) cycle += std::to_string(i) + (i < q ? " " : ")");
  const auto gen = cq.index_of(Perm::from_cycles(q, cycle));
  if (!gen) throw PreconditionError("not the cyclic group of its degree");
  std::vector<std::uint32_t> exponent(q);
  Elem x = cq.identity();
  for (std::uint32_t a = 0; a < q; ++a) {
    exponent[x] = a;
    x = cq.multiply(x, *gen);
  }
  return exponent;
}

Subspace tuple_subspace(const TupleGroup& q, const Subgroup& h, std::uint32_t p) {
  const auto* cq = dynamic_cast<const PermGroup*>(&q.base());
  if (!cq || cq->degree() != p) throw PreconditionError("tuple group is not over C_p");
  const auto exponent = cyclic_exponents(*cq);
  std::vector<FpVec> rows;
  for (auto e : h.generators()) {
    FpVec v;
    for (auto c : q.tuple(e)) v.push_back(exponent[c]);
    rows.push_back(std::move(v));
  }
  return Subspace::span(p, q.arity(), rows);
}

}  // namespace wordform
