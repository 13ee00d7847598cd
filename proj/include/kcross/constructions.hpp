#ifndef KCROSS_CONSTRUCTIONS_HPP
#define KCROSS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcross/family.hpp"

namespace kcross {

// Splits the full star at element 1 into A (the colex-first floor(C(n-1,k-1)/2)
// members) and B (the rest). Disjoint and cross-intersecting; both stars.
// Requires n > 2k.
FamilyPair half_star_split(int n, int k);

// The pair built from F = {F : F ∩ [k] = {1} or [2,k]} and
// G = {G : 1 ∈ G, G ∩ [2,k] ≠ ∅}. If |F| <= floor(C(n-1,k-1)/2), the
// colex-smallest members of G are moved to F's side until that side has
// floor(C(n-1,k-1)/2)+1 members. Requires n > 2k, k >= 3.
FamilyPair section3_pair(int n, int k);

// Star-free pair with sizes floor/ceil of (C(n-1,k-1)-C(n-2k,k-1))/2, plus 1
// each: the two stars at 1 punctured against P = [2,k+1] and Q = {2}∪[k+2,2k],
// with the common part split equitably. Requires n >= 2k+1, k >= 2.
FamilyPair prop22_pair(int n, int k);

// Star-free pair whose min size is floor((C(n-1,k-1)-C(n-2k,k-1)+k+1)/2):
// A = {[2,k+1]} ∪ {X ∋ 1 : X ∩ [k+2,2k] ≠ ∅},
// B = {{j}∪[k+2,2k] : 2 <= j <= k+1} ∪ {X ∋ 1 : X ∩ [2,k+1] ≠ ∅},
// with the shared star part split equitably. Requires n > 2k+1, k >= 5, and
// that the equitable split can reach the target (fails for n around k^3 and
// beyond, where the target exceeds what this shape can deliver).
FamilyPair prop55_pair(int n, int k);

enum class PairCheck { disjoint, cross, star_free, pyber, sizes };

struct CheckOutcome {
  PairCheck check{};
  bool pass = false;
  std::string witness;  // human-readable; empty when passing
};

struct VerifyReport {
  std::vector<CheckOutcome> outcomes;
  bool all_pass = true;
};

struct ExpectedSizes {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

// Runs the requested checks. pyber asserts |A|·|B| <= C(n-1,k-1)^2 (only
// meaningful for cross-intersecting inputs with n >= 2k); sizes compares
// against the caller-supplied pair.
VerifyReport verify_pair(const FamilyPair& p, const std::vector<PairCheck>& checks,
                         std::optional<ExpectedSizes> expected = std::nullopt);

// Generator lookup used by the C API and CLI: half-star, section3, prop22,
// prop55.
FamilyPair construct_by_name(const std::string& name, int n, int k);

}  // namespace kcross

#endif  // KCROSS_CONSTRUCTIONS_HPP
