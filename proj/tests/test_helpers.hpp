#ifndef KCROSS_TEST_HELPERS_HPP
#define KCROSS_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "kcross/family.hpp"

namespace kcross::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) {
  return std::mt19937_64(seed);
}

// All k-subsets of [n] as sorted element vectors, in the order produced by
// std::sort on the vectors (which is the lexicographic set order).
inline std::vector<std::vector<int>> all_ksets_sorted(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(comb);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Family random_family(std::mt19937_64& rng, int n, int k, double density = 0.3) {
  Family f((GroundSet(n, k)));
  std::bernoulli_distribution coin(density);
  for_each_kset(n, k, [&](std::uint64_t, std::uint64_t rank) {
    if (coin(rng)) f.insert_rank(rank);
  });
  return f;
}

// Random pair guaranteed cross-intersecting: pick A at random, then sample B
// from the sets that meet every member of A.
inline FamilyPair random_cross_pair(std::mt19937_64& rng, int n, int k, double density_a = 0.15,
                                    double density_b = 0.5) {
  Family a = random_family(rng, n, k, density_a);
  auto a_masks = a.member_masks();
  Family b((GroundSet(n, k)));
  std::bernoulli_distribution coin(density_b);
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    for (std::uint64_t am : a_masks)
      if ((mask & am) == 0) return;
    if (coin(rng)) b.insert_rank(rank);
  });
  return FamilyPair(std::move(a), std::move(b));
}

// Mixed-uniformity cross-intersecting pair (for the shadow/lex machinery).
inline std::pair<Family, Family> random_cross_families(std::mt19937_64& rng, int n, int ka, int kb,
                                                       double density_a = 0.15,
                                                       double density_b = 0.5) {
  Family a = random_family(rng, n, ka, density_a);
  auto a_masks = a.member_masks();
  Family b((GroundSet(n, kb)));
  std::bernoulli_distribution coin(density_b);
  for_each_kset(n, kb, [&](std::uint64_t mask, std::uint64_t rank) {
    for (std::uint64_t am : a_masks)
      if ((mask & am) == 0) return;
    if (coin(rng)) b.insert_rank(rank);
  });
  return {std::move(a), std::move(b)};
}

// Greedy random intersecting family: admit a random set iff it meets all
// members admitted so far.
inline Family random_intersecting_family(std::mt19937_64& rng, int n, int k, double density = 0.5) {
  Family f((GroundSet(n, k)));
  std::vector<std::uint64_t> members;
  std::bernoulli_distribution coin(density);
  std::vector<std::uint64_t> order;
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t) { order.push_back(mask); });
  std::shuffle(order.begin(), order.end(), rng);
  for (std::uint64_t mask : order) {
    if (!coin(rng)) continue;
    bool ok = true;
    for (std::uint64_t m : members)
      if ((m & mask) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      members.push_back(mask);
      f.insert(mask);
    }
  }
  return f;
}

// Pairwise oracle, deliberately primitive.
inline bool oracle_cross(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (auto x : a)
    for (auto y : b)
      if ((x & y) == 0) return false;
  return true;
}

}  // namespace kcross::testing

#endif
