#pragma once

// Branching rules: restrict an irreducible module of the big algebra to the
// subalgebra through a projection matrix and peel off subalgebra irreducibles
// by repeated highest-weight subtraction.

#include "liebranch/core.hpp"
#include "liebranch/projection.hpp"
#include "liebranch/root_system.hpp"
#include "liebranch/weight_system.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

namespace liebranch {

struct Constituent {
  Weight highest_weight;
  BigInt multiplicity;
  BigInt dimension;

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Constituents in extraction order (decreasing rho^vee height).
struct BranchingResult {
  std::vector<Constituent> constituents;

  BigInt total_dimension() const {
    BigInt t = 0;
    for (const auto& c : constituents) t += c.multiplicity * c.dimension;
    return t;
  }

  /// Constituents sorted by highest weight, for multiset comparison.
  std::vector<Constituent> canonical() const {
    auto v = constituents;
    std::sort(v.begin(), v.end(),
              [](const Constituent& a, const Constituent& b) { return a.highest_weight < b.highest_weight; });
    return v;
  }

  friend bool same_multiset(const BranchingResult& a, const BranchingResult& b) {
    return a.canonical() == b.canonical();
  }
};

/// Subalgebra-dominant part of the restricted weight system: every weight of
/// V(hw) is projected and only dominant images are kept, with multiplicities
/// accumulated over all preimages.
inline WeightSystem restrict_dominant(const RootSystem& big, const RootSystem& sub,
                                      const ProjectionMatrix& a, const Weight& hw,
                                      WeightSystemCache* cache = nullptr) {
  if (a.cols() != big.rank() || a.rows() != sub.rank())
    throw InputError("projection matrix shape does not match the algebras");
  std::shared_ptr<const WeightSystem> dominant;
  if (cache != nullptr)
    dominant = cache->dominant(big, hw);
  else
    dominant = std::make_shared<const WeightSystem>(freudenthal_multiplicities(big, hw));

  WeightSystem restricted(sub.type());
  std::unordered_map<Weight, long long, WeightHash> counts;
  std::vector<int> image(sub.rank());
  for (const auto& [mu, m] : *dominant) {
    counts.clear();
    for_each_orbit_weight(big, mu, [&](const Weight& u) {
      bool dominant_image = true;
      for (std::size_t i = 0; i < a.rows() && dominant_image; ++i) {
        const auto& row = a.data()[i];
        int s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * u[j];
        image[i] = s;
        dominant_image = s >= 0;
      }
      if (dominant_image) ++counts[Weight(image)];
    });
    for (const auto& [img, c] : counts) restricted.add(img, m * c);
  }
  return restricted;
}

/// Decomposes V(hw) of the big algebra into subalgebra irreducibles.
inline BranchingResult branch(const RootSystem& big, const RootSystem& sub, const ProjectionMatrix& a,
                              const Weight& hw, WeightSystemCache* cache = nullptr) {
  big.check_rank(hw);
  if (!hw.is_dominant()) throw InputError("highest weight " + to_run_length(hw) + " is not dominant");
  WeightSystemCache local;
  WeightSystemCache& memo = cache != nullptr ? *cache : local;

  WeightSystem residual = restrict_dominant(big, sub, a, hw, &memo);
  BranchingResult result;
  while (!residual.empty()) {
    const Weight* top = nullptr;
    long long best = 0;
    for (const auto& [mu, m] : residual) {
      const long long p = sub.scaled_rho_check_pairing(mu);
      if (top == nullptr || p > best || (p == best && mu > *top)) {
        top = &mu;
        best = p;
      }
    }
    const Weight mu = *top;
    const BigInt m = residual.multiplicity(mu);
    result.constituents.push_back({mu, m, weyl_dimension(sub, mu)});
    const auto sys = memo.dominant(sub, mu);
    for (const auto& [nu, k] : *sys) {
      try {
        residual.add(nu, -(m * k));
      } catch (const ConsistencyError&) {
        throw ConsistencyError("branching produced a negative multiplicity at " + to_run_length(nu) +
                               "; the projection matrix is not valid");
      }
    }
  }
  return result;
}

/// E7 constituents of a C28 irreducible.
inline BranchingResult branch(const ProjectionMatrix& a, const Weight& hw, WeightSystemCache* cache = nullptr) {
  return branch(root_system(AlgebraType{Family::C, 28}), root_system(AlgebraType{Family::E, 7}), a, hw,
                cache);
}

struct BranchingReport {
  BigInt expected_dimension;
  BigInt constituent_dimension;
  bool dimension_ok = false;
  bool all_dominant = false;
  std::vector<Weight> outside_allow_list;

  bool ok() const { return dimension_ok && all_dominant && outside_allow_list.empty(); }
};

/// Dimension conservation, dominance of every constituent, and optionally
/// membership of each constituent in an allow-list.
inline BranchingReport verify_branching(const RootSystem& big, const RootSystem& sub,
                                        const BranchingResult& result, const Weight& hw,
                                        const std::vector<Weight>* allow_list = nullptr) {
  BranchingReport rep;
  rep.expected_dimension = weyl_dimension(big, hw);
  rep.all_dominant = true;
  for (const auto& c : result.constituents) {
    if (!c.highest_weight.is_dominant() || c.multiplicity <= 0) {
      rep.all_dominant = false;
      continue;
    }
    rep.constituent_dimension += c.multiplicity * weyl_dimension(sub, c.highest_weight);
    if (allow_list != nullptr &&
        std::find(allow_list->begin(), allow_list->end(), c.highest_weight) == allow_list->end())
      rep.outside_allow_list.push_back(c.highest_weight);
  }
  rep.dimension_ok = rep.constituent_dimension == rep.expected_dimension;
  return rep;
}

inline BranchingReport verify_branching(const BranchingResult& result, const Weight& hw,
                                        const std::vector<Weight>* allow_list = nullptr) {
  return verify_branching(root_system(AlgebraType{Family::C, 28}), root_system(AlgebraType{Family::E, 7}),
                          result, hw, allow_list);
}

/// True iff both projections give the same branching for every test irrep.
/// An invalid projection (negative residual) counts as not equivalent.
inline bool projections_equivalent(const RootSystem& big, const RootSystem& sub, const ProjectionMatrix& a,
                                   const ProjectionMatrix& b, const std::vector<Weight>& test_irreps,
                                   WeightSystemCache* cache = nullptr) {
  for (const Weight& hw : test_irreps) {
    std::optional<BranchingResult> ra, rb;
    try {
      ra = branch(big, sub, a, hw, cache);
    } catch (const ConsistencyError&) {
    }
    try {
      rb = branch(big, sub, b, hw, cache);
    } catch (const ConsistencyError&) {
    }
    if (ra.has_value() != rb.has_value()) return false;
    if (ra && !same_multiset(*ra, *rb)) return false;
  }
  return true;
}

inline bool projections_equivalent(const ProjectionMatrix& a, const ProjectionMatrix& b,
                                   const std::vector<Weight>& test_irreps, WeightSystemCache* cache = nullptr) {
  return projections_equivalent(root_system(AlgebraType{Family::C, 28}), root_system(AlgebraType{Family::E, 7}),
                                a, b, test_irreps, cache);
}

}  // namespace liebranch
