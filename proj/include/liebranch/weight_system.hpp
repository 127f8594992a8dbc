#pragma once

// Dimensions and weight multiplicities of irreducible highest-weight modules:
// Weyl dimension formula, Freudenthal recursion on the dominant chamber, and
// Weyl-orbit expansion without enumerating the Weyl group.

#include "liebranch/core.hpp"
#include "liebranch/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace liebranch {

/// Finite multiset of weights. Zero-multiplicity entries are never stored.
class WeightSystem {
 public:
  using Map = std::map<Weight, BigInt>;

  WeightSystem() = default;
  explicit WeightSystem(AlgebraType type) : type_(type) {}

  const AlgebraType& type() const { return type_; }
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  BigInt multiplicity(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? BigInt(0) : it->second;
  }
  bool contains(const Weight& w) const { return entries_.count(w) != 0; }

  /// Adds (or with a negative amount, removes) multiplicity. Going below zero
  /// throws ConsistencyError.
  void add(const Weight& w, const BigInt& amount) {
    if (amount == 0) return;
    auto [it, inserted] = entries_.try_emplace(w, 0);
    it->second += amount;
    if (it->second < 0)
      throw ConsistencyError("negative multiplicity at weight " + to_run_length(w));
    if (it->second == 0) entries_.erase(it);
  }

  /// Sum of all multiplicities.
  BigInt total() const {
    BigInt t = 0;
    for (const auto& [w, m] : entries_) t += m;
    return t;
  }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.type_ == b.type_ && a.entries_ == b.entries_;
  }

 private:
  AlgebraType type_{};
  Map entries_;
};

/// Weyl dimension formula, prod over positive roots <hw+rho,alpha>/<rho,alpha>.
inline BigInt weyl_dimension(const RootSystem& rs, const Weight& hw) {
  rs.check_rank(hw);
  if (!hw.is_dominant())
    throw InputError("highest weight " + to_run_length(hw) + " is not dominant");
  BigInt num = 1;
  BigInt den = 1;
  for (const Root& root : rs.positive_roots()) {
    long long a = 0;
    long long b = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const long long w = static_cast<long long>(root.coefficients[i]) * rs.length_class(i);
      a += w * (hw[i] + 1);
      b += w;
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension is not an integer");
  return num / den;
}

/// Depth of mu below hw: sum of the simple-root coefficients of hw - mu.
inline long long depth_below(const RootSystem& rs, const Weight& hw, const Weight& mu) {
  const long long d = rs.scaled_rho_check_pairing(hw - mu);
  if (d % rs.rho_check_denominator() != 0)
    throw ConsistencyError("weight " + to_run_length(mu) + " is not in the root lattice coset of " +
                           to_run_length(hw));
  return d / rs.rho_check_denominator();
}

/// All dominant weights of V(hw), ordered by increasing depth below hw, ties
/// broken by decreasing lexicographic order of labels.
///
/// Every dominant mu < hw is covered by some dominant mu + alpha (alpha > 0)
/// that is still <= hw, so breadth-first subtraction of positive roots,
/// pruned to the dominant chamber, reaches the whole support.
inline std::vector<Weight> dominant_weight_support(const RootSystem& rs, const Weight& hw) {
  rs.check_rank(hw);
  if (!hw.is_dominant())
    throw InputError("highest weight " + to_run_length(hw) + " is not dominant");
  std::set<Weight> seen{hw};
  std::vector<Weight> frontier{hw};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& mu : frontier) {
      for (const Root& root : rs.positive_roots()) {
        Weight nu = mu - root.labels;
        if (!nu.is_dominant()) continue;
        if (seen.insert(nu).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<long long, Weight>> keyed;
  keyed.reserve(seen.size());
  for (const Weight& w : seen) keyed.emplace_back(depth_below(rs, hw, w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& [d, w] : keyed) out.push_back(std::move(w));
  return out;
}

/// Freudenthal recursion restricted to the dominant chamber:
///   (|hw+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1} m(mu+k alpha) <mu+k alpha, alpha>
/// with m(mu + k alpha) looked up through the dominant representative.
/// The positive roots are visited in the order given by root_order (all of
/// them, once each); the result does not depend on it.
inline WeightSystem freudenthal_multiplicities(const RootSystem& rs, const Weight& hw,
                                               const std::vector<std::size_t>& root_order = {}) {
  const std::vector<Weight> support = dominant_weight_support(rs, hw);
  const auto& roots = rs.positive_roots();
  std::vector<std::size_t> order = root_order;
  if (order.empty()) {
    order.resize(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  } else if (order.size() != roots.size()) {
    throw InputError("root order must list every positive root once");
  }

  const Weight rho = rs.weyl_vector();
  const long long top_norm = rs.scaled_inner_product(hw + rho, hw + rho);

  std::unordered_map<Weight, BigInt, WeightHash> mult;
  mult.reserve(support.size() * 2);
  for (const Weight& mu : support) {
    if (mu == hw) {
      mult.emplace(mu, 1);
      continue;
    }
    BigInt sum = 0;
    for (std::size_t idx : order) {
      const Weight& alpha = roots[idx].labels;
      Weight nu = mu + alpha;
      for (;;) {
        const Weight dom = rs.to_dominant(nu);
        auto it = mult.find(dom);
        if (it == mult.end()) break;
        sum += it->second * rs.scaled_inner_product(nu, alpha);
        nu += alpha;
      }
    }
    const long long gap = top_norm - rs.scaled_inner_product(mu + rho, mu + rho);
    if (gap <= 0) throw ConsistencyError("Freudenthal denominator vanished at " + to_run_length(mu));
    const BigInt numer = 2 * sum;
    if (numer % gap != 0)
      throw ConsistencyError("non-integral multiplicity at " + to_run_length(mu));
    mult.emplace(mu, numer / gap);
  }

  WeightSystem ws(rs.type());
  for (const Weight& mu : support) ws.add(mu, mult.at(mu));
  return ws;
}

/// Calls visit(u) once for every element u of the Weyl orbit of the dominant
/// weight w. Each non-dominant u has a unique parent s_j u, j being the first
/// negative label of u, so a depth-first walk of that tree needs no visited set.
template <class Visitor>
void for_each_orbit_weight(const RootSystem& rs, const Weight& w, Visitor&& visit) {
  rs.check_rank(w);
  if (!w.is_dominant()) throw InputError("orbit seed " + to_run_length(w) + " is not dominant");
  const std::size_t n = rs.rank();
  struct Frame {
    Weight weight;
    std::size_t next_node;
  };
  std::vector<Frame> stack;
  stack.push_back({w, 0});
  visit(std::as_const(stack.back().weight));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_node == n) {
      stack.pop_back();
      continue;
    }
    const std::size_t i = top.next_node++;
    if (top.weight[i] <= 0) continue;
    Weight child = top.weight;
    rs.reflect_in_place(child, i);
    std::size_t first_negative = 0;
    while (child[first_negative] >= 0) ++first_negative;
    if (first_negative != i) continue;
    visit(std::as_const(child));
    stack.push_back({std::move(child), 0});
  }
}

inline std::size_t orbit_size(const RootSystem& rs, const Weight& w) {
  std::size_t count = 0;
  for_each_orbit_weight(rs, w, [&](const Weight&) { ++count; });
  return count;
}

/// Replaces every dominant weight by its full Weyl orbit at the same multiplicity.
inline WeightSystem orbit_expand(const RootSystem& rs, const WeightSystem& dominant) {
  WeightSystem full(rs.type());
  for (const auto& [mu, m] : dominant) {
    if (!mu.is_dominant())
      throw InputError("orbit_expand needs dominant weights, got " + to_run_length(mu));
    for_each_orbit_weight(rs, mu, [&](const Weight& u) { full.add(u, m); });
  }
  return full;
}

/// All weights of V(hw) with multiplicities.
inline WeightSystem full_weight_system(const RootSystem& rs, const Weight& hw) {
  return orbit_expand(rs, freudenthal_multiplicities(rs, hw));
}

/// Memo of dominant weight systems keyed by (type, highest weight). Fills are
/// idempotent; concurrent readers are safe.
class WeightSystemCache {
 public:
  std::shared_ptr<const WeightSystem> dominant(const RootSystem& rs, const Weight& hw) {
    const Key key{rs.type(), hw};
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto value = std::make_shared<const WeightSystem>(freudenthal_multiplicities(rs, hw));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  using Key = std::pair<AlgebraType, Weight>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const WeightSystem>> cache_;
};

}  // namespace liebranch
