#pragma once

// Tensor product decomposition by the Klimyk (Racah-Speiser) rule:
//   V(l) (x) V(m) = sum over weights nu of V(m), with multiplicity,
//                   sign(w) V(w(l + rho + nu) - rho)
// where w straightens l + rho + nu into the dominant chamber and terms on a
// chamber wall vanish.

#include "liebranch/core.hpp"
#include "liebranch/root_system.hpp"
#include "liebranch/weight_system.hpp"

#include <map>
#include <vector>

namespace liebranch {

/// Dominant highest weights with positive multiplicities.
using Decomposition = WeightSystem;

inline BigInt decomposition_dimension(const RootSystem& rs, const Decomposition& d) {
  BigInt t = 0;
  for (const auto& [hw, m] : d) t += m * weyl_dimension(rs, hw);
  return t;
}

inline Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                      WeightSystemCache* cache = nullptr) {
  rs.check_rank(lambda);
  rs.check_rank(mu);
  if (!lambda.is_dominant()) throw InputError("factor " + to_run_length(lambda) + " is not dominant");
  if (!mu.is_dominant()) throw InputError("factor " + to_run_length(mu) + " is not dominant");

  // Iterate over the weights of the smaller factor.
  const bool swap = weyl_dimension(rs, mu) > weyl_dimension(rs, lambda);
  const Weight& outer = swap ? mu : lambda;
  const Weight& inner = swap ? lambda : mu;

  WeightSystemCache local;
  WeightSystemCache& memo = cache != nullptr ? *cache : local;
  const auto dominant = memo.dominant(rs, inner);

  const Weight rho = rs.weyl_vector();
  const Weight shifted = outer + rho;
  std::map<Weight, BigInt> acc;
  for (const auto& [nu0, m] : *dominant) {
    for_each_orbit_weight(rs, nu0, [&](const Weight& nu) {
      SignedWeight s = rs.to_dominant_signed(shifted + nu, WallPolicy::vanish_on_wall);
      if (s.sign == 0) return;
      acc[s.weight - rho] += s.sign * m;
    });
  }

  Decomposition out(rs.type());
  for (const auto& [hw, m] : acc) {
    if (m < 0)
      throw ConsistencyError("Klimyk sum left a negative multiplicity at " + to_run_length(hw));
    if (m > 0) out.add(hw, m);
  }
  return out;
}

/// Left fold of tensor_decompose over the factors, distributing over constituents.
inline Decomposition tensor_fold(const RootSystem& rs, const std::vector<Weight>& factors,
                                 WeightSystemCache* cache = nullptr) {
  if (factors.empty()) throw InputError("tensor product needs at least one factor");
  WeightSystemCache local;
  WeightSystemCache& memo = cache != nullptr ? *cache : local;
  rs.check_rank(factors.front());
  if (!factors.front().is_dominant())
    throw InputError("factor " + to_run_length(factors.front()) + " is not dominant");
  Decomposition acc(rs.type());
  acc.add(factors.front(), 1);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Decomposition next(rs.type());
    for (const auto& [hw, m] : acc)
      for (const auto& [c, cm] : tensor_decompose(rs, hw, factors[k], &memo)) next.add(c, m * cm);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace liebranch
