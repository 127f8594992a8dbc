#pragma once

#include "liebranch/core.hpp"

#include <algorithm>
#include <vector>

namespace liebranch {

/// Number of nonnegative integer vectors n with sum_i parts[i] * n_i = target.
/// Coin-change dynamic programming over 0..target.
inline BigInt count_partitions(long long target, const std::vector<long long>& parts) {
  if (target < 0) throw InputError("target must be nonnegative");
  if (parts.empty()) throw InputError("part list is empty");
  auto sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() <= 0) throw InputError("parts must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("parts must be distinct");

  std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (long long p : sorted)
    for (long long t = p; t <= target; ++t) ways[t] += ways[t - p];
  return ways[target];
}

}  // namespace liebranch
