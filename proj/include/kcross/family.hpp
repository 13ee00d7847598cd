#ifndef KCROSS_FAMILY_HPP
#define KCROSS_FAMILY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcross/types.hpp"

namespace kcross {

// Rank of a k-set in the colexicographic order of all k-subsets of [n].
// Colex compares the largest differing element, so the rank of a set does not
// depend on n: rank({1,...,k}) = 0, rank = sum_i C(e_i - 1, i) over the
// elements e_1 < ... < e_k.
std::uint64_t colex_rank(std::uint64_t mask) noexcept;
std::uint64_t colex_rank(std::span<const int> elements);
std::uint64_t colex_unrank(std::uint64_t rank, int k) noexcept;

// The lexicographic order <_L: G before H iff min(G\H) < min(H\G).
// On increasing element sequences this is plain sequence order; the span
// overload has no ground-set cap.
std::strong_ordering lex_compare(std::span<const int> g, std::span<const int> h);
std::strong_ordering lex_compare(const KSet& g, const KSet& h) noexcept;

std::vector<int> mask_to_elements(std::uint64_t mask);
std::uint64_t elements_to_mask(std::span<const int> elements, int n);

// A set of k-subsets of [n], stored as a membership bitset indexed by colex
// rank. Capacity C(n,k) is capped at 2^28 ranks.
class Family {
 public:
  explicit Family(GroundSet ground);
  Family(GroundSet ground, std::span<const std::uint64_t> member_masks);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  int k() const { return ground_.k; }
  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains_rank(std::uint64_t rank) const;
  bool contains(std::uint64_t mask) const { return contains_rank(colex_rank(mask)); }
  void insert_rank(std::uint64_t rank);
  void insert(std::uint64_t mask);
  void erase_rank(std::uint64_t rank);

  // Member masks in colex order.
  std::vector<std::uint64_t> member_masks() const;

  template <class F>
  void for_each_member(F&& f) const {  // f(mask, rank)
    for (std::uint64_t w = 0; w < blocks_.size(); ++w) {
      std::uint64_t block = blocks_[w];
      while (block) {
        int bit = std::countr_zero(block);
        block &= block - 1;
        std::uint64_t rank = w * 64 + static_cast<std::uint64_t>(bit);
        f(colex_unrank(rank, ground_.k), rank);
      }
    }
  }

  bool operator==(const Family& other) const;

 private:
  GroundSet ground_;
  std::uint64_t capacity_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// Two families on the same ground set.
struct FamilyPair {
  Family a;
  Family b;

  FamilyPair(Family a_, Family b_);
};

// True iff every member of a meets every member of b (vacuously true when
// either family is empty). Requires equal n; uniformities may differ.
bool cross_intersecting(const Family& a, const Family& b);
inline bool cross_intersecting(const FamilyPair& p) { return cross_intersecting(p.a, p.b); }

// No k-set belongs to both.
bool disjoint_families(const Family& a, const Family& b);
inline bool disjoint_families(const FamilyPair& p) { return disjoint_families(p.a, p.b); }

// Every two members meet; equivalent to cross_intersecting(f, f).
bool is_intersecting(const Family& f);

// Smallest element common to all members, if any. The empty family returns 1
// by convention so that diversity(f) == 0 iff is_star(f) has a value.
std::optional<int> is_star(const Family& f);

// min over elements i of the number of members avoiding i; 0 exactly for
// stars (and the empty family).
std::uint64_t diversity(const Family& f);

enum class RestrictionMode { contains, avoids };

// mode == avoids: members avoiding `element`, same ground set.
// mode == contains: members containing `element` with it deleted, on ground
// set (n-1, k-1); elements above `element` shift down by one.
Family restriction(const Family& f, int element, RestrictionMode mode);

// The (n-k)-uniform family of complements; involutive. Requires k < n.
Family complement_family(const Family& f);

}  // namespace kcross

#endif  // KCROSS_FAMILY_HPP
