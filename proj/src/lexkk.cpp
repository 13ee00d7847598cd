#include "kcross/lexkk.hpp"

#include <algorithm>

namespace kcross {

Family shadow(const Family& f, int level) {
  if (level < 1 || level >= f.k())
    fail(Errc::precondition, "shadow level must satisfy 1 <= l < k");
  Family out(GroundSet(f.n(), level));
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
    auto elems = mask_to_elements(mask);
    // all level-subsets of the member, via position subsets
    for_each_kset(f.k(), level, [&](std::uint64_t positions, std::uint64_t) {
      std::uint64_t sub = 0;
      std::uint64_t p = positions;
      while (p) {
        int idx = std::countr_zero(p);
        p &= p - 1;
        sub |= std::uint64_t{1} << (elems[static_cast<std::size_t>(idx)] - 1);
      }
      out.insert(sub);
    });
  });
  return out;
}

namespace {

void build_segment(Family& fam, int n, std::uint64_t prefix, int e_min, int t, std::uint64_t m) {
  if (m == 0) return;
  if (t == 0) {
    fam.insert(prefix);
    return;
  }
  for (int e = e_min; e <= n - t + 1 && m > 0; ++e) {
    std::uint64_t count = choose64(n - e, t - 1);
    std::uint64_t take = std::min(count, m);
    build_segment(fam, n, prefix | (std::uint64_t{1} << (e - 1)), e + 1, t - 1, take);
    m -= take;
  }
}

}  // namespace

Family lex_segment(int n, int t, std::uint64_t m) {
  GroundSet g(n, t);
  if (m > g.num_ksets()) fail(Errc::precondition, "segment size exceeds C(n,t)");
  Family out(g);
  build_segment(out, n, 0, 1, t, m);
  return out;
}

std::uint64_t lex_rank(int n, std::uint64_t mask) {
  auto elems = mask_to_elements(mask);
  int t = static_cast<int>(elems.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < t; ++i) {
    for (int e = prev + 1; e < elems[static_cast<std::size_t>(i)]; ++e)
      rank += choose64(n - e, t - 1 - i);
    prev = elems[static_cast<std::size_t>(i)];
  }
  return rank;
}

std::uint64_t lex_unrank(int n, int t, std::uint64_t index) {
  if (index >= choose64(n, t)) fail(Errc::usage, "lex index out of range");
  std::uint64_t mask = 0;
  int e = 1;
  for (int left = t; left > 0; --left) {
    while (true) {
      std::uint64_t count = choose64(n - e, left - 1);
      if (index < count) break;
      index -= count;
      ++e;
    }
    mask |= std::uint64_t{1} << (e - 1);
    ++e;
  }
  return mask;
}

bool hilton_equivalent_check(const Family& a, const Family& b) {
  if (a.n() != b.n()) fail(Errc::usage, "hilton check requires equal n");
  int n = a.n();
  if (a.k() + b.k() > n) fail(Errc::precondition, "hilton check requires a + b <= n");
  if (b.empty()) return true;
  Family comp = complement_family(b);  // (n-b)-uniform
  // At the boundary a+b == n the complements are already a-uniform and the
  // level-a shadow is the identity.
  Family shad = (a.k() == n - b.k()) ? comp : shadow(comp, a.k());
  bool empty_meet = true;
  a.for_each_member([&](std::uint64_t, std::uint64_t rank) {
    if (shad.contains_rank(rank)) empty_meet = false;
  });
  return empty_meet;
}

bool kk_compress_check(const Family& a, const Family& b) {
  if (a.n() != b.n()) fail(Errc::usage, "kk check requires equal n");
  if (a.k() + b.k() >= a.n()) fail(Errc::precondition, "kk check requires n > a + b");
  if (!cross_intersecting(a, b)) fail(Errc::precondition, "kk check requires a cross-intersecting pair");
  Family la = lex_segment(a.n(), a.k(), a.size());
  Family lb = lex_segment(b.n(), b.k(), b.size());
  return cross_intersecting(la, lb);
}

std::uint64_t max_cross_partner(int n, int a, int b, std::uint64_t m, Family* witnesses) {
  if (a + b >= n) fail(Errc::precondition, "max_cross_partner requires n > a + b");
  if (m < 1 || m > choose64(n, a)) fail(Errc::precondition, "segment size out of [1, C(n,a)]");
  auto segment = lex_segment(n, a, m).member_masks();
  if (witnesses) *witnesses = Family(GroundSet(n, b));
  std::uint64_t count = 0;
  for_each_kset(n, b, [&](std::uint64_t mask, std::uint64_t rank) {
    for (std::uint64_t s : segment)
      if ((mask & s) == 0) return;
    ++count;
    if (witnesses) witnesses->insert_rank(rank);
  });
  return count;
}

}  // namespace kcross
