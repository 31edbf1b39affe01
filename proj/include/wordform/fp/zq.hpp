#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/fp/subspace.hpp"
#include "wordform/group/perm_group.hpp"
#include "wordform/group/subgroup.hpp"
#include "wordform/group/tuple_group.hpp"

namespace wordform {

/// q = p^t with p prime; throws PreconditionError otherwise.
struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t t = 1;
};
PrimePower prime_power_of(std::uint64_t q);

/// The additive group (Z/qZ)^k. Element codes are base-q digit strings with the
/// first coordinate most significant.
class ZqGroup final : public FiniteGroup {
 public:
  ZqGroup(std::uint32_t q, std::size_t k, const Ceilings& ceilings = {});

  std::uint32_t q() const noexcept { return q_; }
  std::size_t k() const noexcept { return k_; }
  FpVec digits(Elem e) const { return fp_decode(e, q_, k_); }
  Elem encode(const FpVec& v) const { return static_cast<Elem>(fp_code(v, q_)); }

  std::size_t order() const override { return order_; }
  Elem identity() const override { return 0; }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override;
  std::vector<Elem> generators() const override;
  std::string label(Elem a) const override { return format_vector(digits(a)); }

 private:
  std::uint32_t q_;
  std::size_t k_;
  std::size_t order_;
};

/// V_H: H ∩ (p^{t-1} Z/qZ)^k rescaled into F_p^k.
Subspace vh_extract(const ZqGroup& g, const Subgroup& h);

/// |H| q^{d(μ^{1/d}-1)} / q^{dim V_H} with μ = min_weight_gap(V_H, W). Requires d >= 1.
struct PrimePowerBound {
  std::size_t order = 0;
  std::size_t dim_vh = 0;
  std::size_t mu = 0;
  long double value = 0;
};
PrimePowerBound prime_power_bound(const ZqGroup& g, const Subgroup& h, const Subspace& w, std::size_t d);
long double prime_power_bound_value(std::size_t order, std::uint32_t q, std::size_t mu, std::size_t dim_vh,
                                    std::size_t d);

/// Exponent of each element of the cyclic group C_q relative to the generator (1 2 ... q).
std::vector<std::uint32_t> cyclic_exponents(const PermGroup& cq);
/// A subgroup of C_p^k (as tuples over the cyclic permutation group) as a subspace of F_p^k.
Subspace tuple_subspace(const TupleGroup& q, const Subgroup& h, std::uint32_t p);

}  // namespace wordform
