#ifndef KCROSS_LEXKK_HPP
#define KCROSS_LEXKK_HPP

#include <cstdint>

#include "kcross/family.hpp"

namespace kcross {

// The l-shadow: all l-sets contained in some member. Requires 1 <= l < k.
Family shadow(const Family& f, int level);

// The first m t-subsets of [n] in lexicographic order, built by direct
// combinatorial unranking (no sorting). Requires 0 <= m <= C(n,t).
Family lex_segment(int n, int t, std::uint64_t m);

// Index (0-based) of a t-set in the lex order of all t-subsets of [n].
std::uint64_t lex_rank(int n, std::uint64_t mask);
std::uint64_t lex_unrank(int n, int t, std::uint64_t index);

// Truth of A ∩ σ^(a)(B^c) = ∅ for an a-uniform A and b-uniform B on the same
// [n]. Equals cross_intersecting(a, b) whenever n > a+b (property-tested).
// The boundary a+b == n is accepted: the complements are already a-uniform
// and the level-a shadow is the identity there. Rejects a+b > n.
bool hilton_equivalent_check(const Family& a, const Family& b);

// For a cross-intersecting input pair, materializes the lex segments of the
// same sizes and returns whether those are cross-intersecting. This must
// always hold; a false return signals an implementation bug. Rejects pairs
// that are not cross-intersecting or have a+b > n.
bool kk_compress_check(const Family& a, const Family& b);

// Exact maximum size of a b-uniform family on [n] cross-intersecting with the
// lex segment L(n,a,m), computed as the number of b-sets meeting every
// segment member. Requires n > a+b and 1 <= m <= C(n,a). When `witnesses` is
// non-null it receives the qualifying b-sets.
std::uint64_t max_cross_partner(int n, int a, int b, std::uint64_t m,
                                Family* witnesses = nullptr);

}  // namespace kcross

#endif  // KCROSS_LEXKK_HPP
