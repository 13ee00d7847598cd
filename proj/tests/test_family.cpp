#include "kcross/family.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace kcross;
using namespace kcross::testing;

namespace {

// Independent colex comparator: compare the largest differing element.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  return ra < rb;
}

Family family_of(int n, int k, const std::vector<std::vector<int>>& members) {
  Family f((GroundSet(n, k)));
  for (const auto& m : members) f.insert(elements_to_mask(m, n));
  return f;
}

Family full_star(int n, int k, int center) {
  Family f((GroundSet(n, k)));
  std::uint64_t bit = std::uint64_t{1} << (center - 1);
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    if (mask & bit) f.insert_rank(rank);
  });
  return f;
}

Family complete_family(int n, int k) {
  Family f((GroundSet(n, k)));
  for_each_kset(n, k, [&](std::uint64_t, std::uint64_t rank) { f.insert_rank(rank); });
  return f;
}

// The two section-3 families, built straight from their defining conditions.
Family section3_f(int n, int k) {
  Family f((GroundSet(n, k)));
  std::uint64_t head = low_bits(k), tail = head & ~std::uint64_t{1};
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    std::uint64_t meet = mask & head;
    if (meet == 1 || meet == tail) f.insert_rank(rank);
  });
  return f;
}

Family section3_g(int n, int k) {
  Family g((GroundSet(n, k)));
  std::uint64_t tail = low_bits(k) & ~std::uint64_t{1};
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    if ((mask & 1u) && (mask & tail)) g.insert_rank(rank);
  });
  return g;
}

}  // namespace

TEST_CASE("colex rank golden values") {
  CHECK(colex_rank(std::vector<int>{1, 2, 3}) == 0);
  CHECK(colex_rank(std::vector<int>{5, 6, 7}) == 34);  // C(7,3)-1
  CHECK(colex_rank(std::vector<int>{1, 2, 4}) == 1);
}

TEST_CASE("colex rank agrees with sort-based enumeration at (7,3)") {
  auto sets = all_ksets_sorted(7, 3);
  std::sort(sets.begin(), sets.end(), colex_less);
  for (std::size_t i = 0; i < sets.size(); ++i)
    CHECK(colex_rank(std::span<const int>(sets[i])) == i);
}

TEST_CASE("colex rank/unrank round-trip for all (n,k), n <= 20") {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
        REQUIRE(colex_rank(mask) == rank);
        REQUIRE(colex_unrank(rank, k) == mask);
      });
}

TEST_CASE("lexicographic comparison") {
  std::vector<int> a{1, 2, 77}, b{1, 3, 4};
  CHECK(lex_compare(std::span<const int>(a), std::span<const int>(b)) == std::strong_ordering::less);
  CHECK(lex_compare(std::span<const int>(b), std::span<const int>(a)) ==
        std::strong_ordering::greater);
  CHECK(lex_compare(std::span<const int>(a), std::span<const int>(a)) ==
        std::strong_ordering::equal);
  std::vector<int> c{2, 3}, d{1, 9};
  CHECK(lex_compare(std::span<const int>(c), std::span<const int>(d)) ==
        std::strong_ordering::greater);

  // bitset form agrees with the element form
  auto rng = make_rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 17);
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::uint64_t m1 = colex_unrank(rng() % choose64(n, k), k);
    std::uint64_t m2 = colex_unrank(rng() % choose64(n, k), k);
    auto e1 = mask_to_elements(m1), e2 = mask_to_elements(m2);
    CHECK(lex_compare(KSet{m1}, KSet{m2}) ==
          lex_compare(std::span<const int>(e1), std::span<const int>(e2)));
  }
}

TEST_CASE("cross_intersecting basics") {
  CHECK(cross_intersecting(full_star(7, 3, 1), full_star(7, 3, 1)));
  Family a = family_of(7, 3, {{1, 2, 3}});
  Family b = family_of(7, 3, {{4, 5, 6}});
  CHECK_FALSE(cross_intersecting(a, b));
  Family empty((GroundSet(7, 3)));
  CHECK(cross_intersecting(a, empty));  // vacuous
  CHECK(cross_intersecting(empty, empty));
}

TEST_CASE("is_intersecting") {
  CHECK(is_intersecting(full_star(8, 3, 2)));
  CHECK_FALSE(is_intersecting(family_of(4, 2, {{1, 2}, {3, 4}})));
  CHECK(is_intersecting(section3_g(7, 3)));
  CHECK(is_intersecting(Family(GroundSet(5, 2))));  // empty
  CHECK(cross_intersecting(section3_f(7, 3), section3_g(7, 3)));
}

TEST_CASE("is_star") {
  CHECK(is_star(full_star(7, 3, 4)) == 4);
  CHECK_FALSE(is_star(family_of(4, 2, {{1, 2}, {3, 4}})).has_value());
  CHECK_FALSE(is_star(section3_f(7, 3)).has_value());
  CHECK(is_star(Family(GroundSet(7, 3))) == 1);  // empty family convention
}

TEST_CASE("diversity") {
  CHECK(diversity(full_star(7, 3, 1)) == 0);
  CHECK(diversity(complete_family(7, 3)) == choose64(6, 3));
  CHECK(diversity(section3_f(7, 3)) == 4);  // the n-k sets of type [2,k] u {j}
  CHECK(diversity(Family(GroundSet(7, 3))) == 0);
}

TEST_CASE("diversity is zero exactly on stars (random families)") {
  auto rng = make_rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    int k = 2 + static_cast<int>(rng() % 3);
    if (k > n / 2) k = n / 2;
    Family f = random_family(rng, n, k, 0.2);
    if (f.empty()) continue;
    CHECK((diversity(f) == 0) == is_star(f).has_value());
  }
}

TEST_CASE("restriction") {
  int n = 7, k = 3;
  Family star = full_star(n, k, 1);
  CHECK(restriction(star, 1, RestrictionMode::contains) == complete_family(n - 1, k - 1));
  CHECK(restriction(star, 1, RestrictionMode::avoids).empty());

  // G(7,3) restricted to the sets containing 1, relabeled to [6]: the 2-sets
  // meeting {1,2}.
  Family g = section3_g(7, 3);
  Family res = restriction(g, 1, RestrictionMode::contains);
  CHECK(res.size() == choose64(6, 2) - choose64(4, 2));
  Family expected((GroundSet(6, 2)));
  for_each_kset(6, 2, [&](std::uint64_t mask, std::uint64_t rank) {
    if (mask & 0b11u) expected.insert_rank(rank);
  });
  CHECK(res == expected);

  // avoids keeps the ground set
  Family avoid = restriction(g, 2, RestrictionMode::avoids);
  CHECK(avoid.ground() == g.ground());
  avoid.for_each_member([&](std::uint64_t mask, std::uint64_t) { CHECK((mask & 0b10u) == 0); });
}

TEST_CASE("complement family") {
  Family f = family_of(5, 2, {{1, 2}});
  Family c = complement_family(f);
  CHECK(c.ground() == GroundSet(5, 3));
  CHECK(c.size() == 1);
  CHECK(c.contains(elements_to_mask(std::vector<int>{3, 4, 5}, 5)));

  auto rng = make_rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    Family r = random_family(rng, n, k, 0.3);
    CHECK(complement_family(complement_family(r)) == r);
  }

  Family cstar = complement_family(full_star(7, 3, 1));
  CHECK(cstar.size() == choose64(6, 4));
  cstar.for_each_member([&](std::uint64_t mask, std::uint64_t) { CHECK((mask & 1u) == 0); });
}

TEST_CASE("EKR size bound on random intersecting families") {
  auto rng = make_rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = 2 * k + static_cast<int>(rng() % 4);
    Family f = random_intersecting_family(rng, n, k);
    REQUIRE(is_intersecting(f));
    CHECK(f.size() <= choose64(n - 1, k - 1));
  }
}

TEST_CASE("validation and caps") {
  CHECK_THROWS_AS(GroundSet(3, 4), Error);
  CHECK_THROWS_AS(GroundSet(65, 2), Error);
  CHECK_THROWS_AS(Family(GroundSet(64, 32)), Error);  // over the 2^28 rank cap
  Family f((GroundSet(6, 3)));
  CHECK_THROWS_AS(f.insert(0b11u), Error);             // wrong size
  CHECK_THROWS_AS(f.insert(0b111ull << 10), Error);    // outside [6]
  CHECK_THROWS_AS(FamilyPair(Family(GroundSet(6, 3)), Family(GroundSet(7, 3))), Error);
  CHECK_THROWS_AS(restriction(Family(GroundSet(5, 1)), 1, RestrictionMode::contains), Error);
  CHECK_THROWS_AS(complement_family(complete_family(4, 4)), Error);
}
