#include "kcross/family.hpp"

#include <algorithm>

namespace kcross {

std::uint64_t choose64(int n, int r) noexcept {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (n < 0 || n > 64 || r < 0 || r > n) return 0;
  return table[n][r];
}

std::uint64_t colex_rank(std::uint64_t mask) noexcept {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    int pos = std::countr_zero(mask);
    mask &= mask - 1;
    rank += choose64(pos, i);
    ++i;
  }
  return rank;
}

std::uint64_t colex_rank(std::span<const int> elements) {
  std::uint64_t rank = 0;
  int i = 1;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) fail(Errc::usage, "element out of [1,64]");
    rank += choose64(e - 1, i);
    ++i;
  }
  return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, int k) noexcept {
  std::uint64_t mask = 0;
  int p = 64;
  for (int i = k; i >= 1; --i) {
    while (p > 0 && choose64(p - 1, i) > rank) --p;
    // now C(p-1, i) <= rank, the i-th largest element is p
    mask |= std::uint64_t{1} << (p - 1);
    rank -= choose64(p - 1, i);
  }
  return mask;
}

std::strong_ordering lex_compare(std::span<const int> g, std::span<const int> h) {
  if (g.size() != h.size()) fail(Errc::usage, "lex_compare requires equal sizes");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != h[i]) return g[i] < h[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const KSet& g, const KSet& h) noexcept {
  std::uint64_t diff = g.bits ^ h.bits;
  if (diff == 0) return std::strong_ordering::equal;
  // The smallest differing element decides; it belongs to whichever set
  // holds it, and that set comes first.
  std::uint64_t low = diff & (~diff + 1);
  return (g.bits & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<int> mask_to_elements(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t elements_to_mask(std::span<const int> elements, int n) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e > n) fail(Errc::parse, "element " + std::to_string(e) + " out of [1," + std::to_string(n) + "]");
    std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (mask & bit) fail(Errc::parse, "repeated element " + std::to_string(e));
    mask |= bit;
  }
  return mask;
}

Family::Family(GroundSet ground) : ground_(ground), capacity_(ground.num_ksets()) {
  if (capacity_ > kMaxFamilyRanks)
    fail(Errc::limit, "C(" + std::to_string(ground.n) + "," + std::to_string(ground.k) +
                          ") exceeds the 2^28 family bitset cap");
  blocks_.assign((capacity_ + 63) / 64, 0);
}

Family::Family(GroundSet ground, std::span<const std::uint64_t> member_masks) : Family(ground) {
  for (std::uint64_t m : member_masks) insert(m);
}

bool Family::contains_rank(std::uint64_t rank) const {
  if (rank >= capacity_) return false;
  return (blocks_[rank >> 6] >> (rank & 63)) & 1u;
}

void Family::insert_rank(std::uint64_t rank) {
  if (rank >= capacity_) fail(Errc::usage, "rank out of range");
  std::uint64_t& block = blocks_[rank >> 6];
  std::uint64_t bit = std::uint64_t{1} << (rank & 63);
  if (!(block & bit)) {
    block |= bit;
    ++size_;
  }
}

void Family::insert(std::uint64_t mask) {
  if (std::popcount(mask) != ground_.k) fail(Errc::usage, "member size != k");
  if (mask & ~low_bits(ground_.n)) fail(Errc::usage, "member exceeds ground set");
  insert_rank(colex_rank(mask));
}

void Family::erase_rank(std::uint64_t rank) {
  if (rank >= capacity_) return;
  std::uint64_t& block = blocks_[rank >> 6];
  std::uint64_t bit = std::uint64_t{1} << (rank & 63);
  if (block & bit) {
    block &= ~bit;
    --size_;
  }
}

std::vector<std::uint64_t> Family::member_masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for_each_member([&](std::uint64_t mask, std::uint64_t) { out.push_back(mask); });
  return out;
}

bool Family::operator==(const Family& other) const {
  return ground_ == other.ground_ && blocks_ == other.blocks_;
}

FamilyPair::FamilyPair(Family a_, Family b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.ground().n != b.ground().n)
    fail(Errc::usage, "family pair requires a common ground set size");
}

bool cross_intersecting(const Family& a, const Family& b) {
  if (a.n() != b.n()) fail(Errc::usage, "cross_intersecting requires equal n");
  if (a.empty() || b.empty()) return true;
  const Family& small = a.size() <= b.size() ? a : b;
  const Family& large = a.size() <= b.size() ? b : a;
  auto large_masks = large.member_masks();
  bool ok = true;
  small.for_each_member([&](std::uint64_t m, std::uint64_t) {
    if (!ok) return;
    for (std::uint64_t other : large_masks) {
      if ((m & other) == 0) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool disjoint_families(const Family& a, const Family& b) {
  if (a.ground() != b.ground()) return true;  // different uniformity: trivially disjoint
  bool ok = true;
  const Family& small = a.size() <= b.size() ? a : b;
  const Family& large = a.size() <= b.size() ? b : a;
  small.for_each_member([&](std::uint64_t, std::uint64_t rank) {
    if (large.contains_rank(rank)) ok = false;
  });
  return ok;
}

bool is_intersecting(const Family& f) {
  auto masks = f.member_masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == 0) return false;
  return true;
}

std::optional<int> is_star(const Family& f) {
  if (f.empty()) return 1;  // convention: makes diversity==0 <=> star total
  std::uint64_t common = ~std::uint64_t{0};
  bool alive = true;
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
    if (!alive) return;
    common &= mask;
    if (common == 0) alive = false;
  });
  if (common == 0) return std::nullopt;
  return std::countr_zero(common) + 1;
}

std::uint64_t diversity(const Family& f) {
  // |F(i-bar)| = size - degree(i); the minimum is size - max degree.
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(f.n()), 0);
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
    while (mask) {
      degree[static_cast<std::size_t>(std::countr_zero(mask))]++;
      mask &= mask - 1;
    }
  });
  std::uint64_t max_deg = 0;
  for (auto d : degree) max_deg = std::max(max_deg, d);
  return f.size() - max_deg;
}

Family restriction(const Family& f, int element, RestrictionMode mode) {
  if (element < 1 || element > f.n()) fail(Errc::usage, "restriction element out of range");
  std::uint64_t bit = std::uint64_t{1} << (element - 1);
  if (mode == RestrictionMode::avoids) {
    Family out(f.ground());
    f.for_each_member([&](std::uint64_t mask, std::uint64_t rank) {
      if (!(mask & bit)) out.insert_rank(rank);
    });
    return out;
  }
  if (f.k() == 1) fail(Errc::precondition, "restriction(contains) on a 1-uniform family");
  Family out(GroundSet(f.n() - 1, f.k() - 1));
  std::uint64_t low = bit - 1;
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
    if (mask & bit) {
      std::uint64_t rest = mask & ~bit;
      // elements above the deleted one shift down by one
      out.insert((rest & low) | ((rest & ~low) >> 1));
    }
  });
  return out;
}

Family complement_family(const Family& f) {
  if (f.k() == f.n()) fail(Errc::precondition, "complement of an n-uniform family is 0-uniform");
  Family out(GroundSet(f.n(), f.n() - f.k()));
  std::uint64_t full = low_bits(f.n());
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) { out.insert(full & ~mask); });
  return out;
}

}  // namespace kcross
