#include "liebranch/frobenius.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liebranch;

namespace {

long long brute_force(long long target, const std::vector<long long>& parts, std::size_t k = 0) {
  if (k == parts.size()) return target == 0 ? 1 : 0;
  long long n = 0;
  for (long long used = 0; used <= target; used += parts[k]) n += brute_force(target - used, parts, k + 1);
  return n;
}

}  // namespace

TEST(Partitions, ReferenceCounts) {
  EXPECT_EQ(count_partitions(1596, {56, 133, 912, 1463, 1539}), 3);
  EXPECT_EQ(count_partitions(1596, {1, 56, 133, 912, 1463, 1539}), 240);
  EXPECT_EQ(brute_force(1596, {56, 133, 912, 1463, 1539}), 3);
  EXPECT_EQ(brute_force(1596, {1539, 1463, 912, 133, 56, 1}), 240);
}

TEST(Partitions, Edges) {
  EXPECT_EQ(count_partitions(0, {56}), 1);
  EXPECT_EQ(count_partitions(0, {3, 5, 7}), 1);
  EXPECT_EQ(count_partitions(55, {56}), 0);
  EXPECT_EQ(count_partitions(56, {56}), 1);
  EXPECT_EQ(count_partitions(10, {1}), 1);
  EXPECT_EQ(count_partitions(10, {1, 2}), 6);
}

TEST(Partitions, MatchesBruteForce) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> part(1, 40), target(0, 200);
  for (int t = 0; t < 200; ++t) {
    std::vector<long long> parts;
    while (parts.size() < 3) {
      const long long p = part(rng);
      if (std::find(parts.begin(), parts.end(), p) == parts.end()) parts.push_back(p);
    }
    const long long n = target(rng);
    EXPECT_EQ(count_partitions(n, parts), brute_force(n, parts));
  }
}

TEST(Partitions, AddingAPartNeverDecreasesTheCount) {
  for (long long n = 0; n <= 300; n += 7)
    EXPECT_LE(count_partitions(n, {56, 133}), count_partitions(n, {56, 133, 912}));
}

TEST(Partitions, LargeCountsStayExact) {
  // partitions of 3000 into parts 1..5: exceeds 32 bits
  const BigInt n = count_partitions(3000, {1, 2, 3, 4, 5});
  EXPECT_GT(n, BigInt(1) << 32);
  EXPECT_EQ(n, count_partitions(3000, {5, 4, 3, 2, 1}));
}

TEST(Partitions, RejectsBadInput) {
  EXPECT_THROW(count_partitions(-1, {1}), InputError);
  EXPECT_THROW(count_partitions(5, {}), InputError);
  EXPECT_THROW(count_partitions(5, {0, 2}), InputError);
  EXPECT_THROW(count_partitions(5, {-3}), InputError);
  EXPECT_THROW(count_partitions(5, {2, 2}), InputError);
}
