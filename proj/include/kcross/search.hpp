#ifndef KCROSS_SEARCH_HPP
#define KCROSS_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kcross/family.hpp"

namespace kcross {

inline constexpr int kMaxSearchVertices = 256;

// Vertex set of size <= 256: 4-word bit rows.
struct VertexSet {
  std::array<std::uint64_t, 4> w{};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void clear(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  bool intersects(const VertexSet& o) const {
    return (w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3]);
  }
  bool subset_of(const VertexSet& o) const {
    return !((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) | (w[3] & ~o.w[3]));
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (int i = 0; i < 4; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  bool operator==(const VertexSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t block = w[i];
      while (block) {
        int bit = std::countr_zero(block);
        block &= block - 1;
        f(i * 64 + bit);
      }
    }
  }
};

// The Kneser graph K(n,k): vertices are the k-subsets of [n] by colex rank,
// edges join disjoint sets. Cross-intersecting pairs are exactly the pairs of
// vertex sets with no edge between them.
class KneserGraph {
 public:
  explicit KneserGraph(GroundSet ground);  // requires n >= 2k, C(n,k) <= 256

  const GroundSet& ground() const { return ground_; }
  int order() const { return order_; }
  const VertexSet& adj(int v) const { return adj_[v]; }
  std::uint64_t vertex_mask(int v) const { return vmask_[v]; }
  // Vertices whose k-set contains a given element of [n].
  const VertexSet& containing(int element) const { return contain_[element - 1]; }
  const VertexSet& all_vertices() const { return all_; }
  int degree(int v) const { return adj_[v].count(); }

  bool side_is_star(const VertexSet& side) const;  // empty counts as a star
  Family to_family(const VertexSet& side) const;

 private:
  GroundSet ground_;
  int order_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> vmask_;
  std::vector<VertexSet> contain_;
  VertexSet all_;
};

struct SearchOptions {
  bool star_free = false;
  bool allow_overlap = false;
  std::uint64_t node_limit = 20'000'000;  // 0 = unlimited
  std::uint64_t time_limit_ms = 0;        // 0 = unlimited
  int workers = 1;
  bool symmetry_fix = true;
};

struct LevelStat {
  std::uint64_t t = 0;
  int feasible = -1;  // 1 feasible, 0 infeasible, -1 interrupted
  std::uint64_t nodes = 0;
};

struct SearchOutcome {
  GroundSet ground;
  bool star_free = false;
  bool allow_overlap = false;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  // Achieves lo and passes the active mode's checks; absent only when lo == 0.
  std::optional<FamilyPair> certificate;
  std::uint64_t nodes = 0;
  std::uint64_t states = 0;  // leaf labelings visited (exhaustive oracle)
  double elapsed_ms = 0.0;
  bool symmetry_fixed = false;
  std::vector<LevelStat> levels;

  bool exact() const { return lo == hi; }
  std::uint64_t value() const;  // throws Errc::inexact when lo < hi
};

// Exact max-min via a descending sequence of feasibility decisions over the
// Kneser graph, with constraint propagation. Starts from a proven upper bound
// and the best construction as lower bound; returns the exact value or the
// best interval within budget. Requires n >= 2k+1 and C(n,k) <= 256.
SearchOutcome exact_maxmin(int n, int k, const SearchOptions& opts = {});

// Brute-force enumeration of all labelings of the vertices into
// {A, B, neither} (plus `both` when overlap is allowed); exact value, always.
// Capped by label-space size (3^C(n,k) or 4^C(n,k)) <= 2^31 states.
SearchOutcome exhaustive_labelings(int n, int k, bool star_free, bool allow_overlap);

}  // namespace kcross

#endif  // KCROSS_SEARCH_HPP
