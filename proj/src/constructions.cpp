#include "kcross/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "kcross/regimes.hpp"

namespace kcross {

namespace {

std::string set_string(std::uint64_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : mask_to_elements(mask)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// Pairwise cross checks are quadratic; generators only self-check when cheap.
constexpr std::uint64_t kSelfCheckCross = 20'000'000;

void require_pair_valid(const FamilyPair& p, bool expect_star_free) {
  if (!disjoint_families(p)) fail(Errc::invariant, "generated pair is not disjoint");
  if (p.a.size() * p.b.size() <= kSelfCheckCross && !cross_intersecting(p))
    fail(Errc::invariant, "generated pair is not cross-intersecting");
  if (expect_star_free && (is_star(p.a) || is_star(p.b)))
    fail(Errc::invariant, "generated pair is not star-free");
}

}  // namespace

FamilyPair half_star_split(int n, int k) {
  if (n <= 2 * k) fail(Errc::precondition, "half_star_split requires n > 2k");
  GroundSet g(n, k);
  std::uint64_t star_size = choose64(n - 1, k - 1);
  std::uint64_t half = star_size / 2;
  Family a(g), b(g);
  std::uint64_t taken = 0;
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    if (!(mask & 1u)) return;  // full star at element 1
    if (taken < half) {
      a.insert_rank(rank);
      ++taken;
    } else {
      b.insert_rank(rank);
    }
  });
  FamilyPair p(std::move(a), std::move(b));
  require_pair_valid(p, false);
  return p;
}

FamilyPair section3_pair(int n, int k) {
  if (n <= 2 * k) fail(Errc::precondition, "section3_pair requires n > 2k");
  if (k < 3) fail(Errc::precondition, "section3_pair requires k >= 3");
  GroundSet g(n, k);
  const std::uint64_t head = low_bits(k);             // [k]
  const std::uint64_t tail = head & ~std::uint64_t{1};  // [2,k]
  Family f(g), gg(g);
  for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
    std::uint64_t meet = mask & head;
    if (meet == 1 || meet == tail) f.insert_rank(rank);
    if ((mask & 1u) && (mask & tail)) gg.insert_rank(rank);
  });
  std::uint64_t half = choose64(n - 1, k - 1) / 2;
  if (f.size() > half) {
    FamilyPair p(std::move(f), std::move(gg));
    require_pair_valid(p, false);
    return p;
  }
  // Move the colex-smallest members of G over until A holds half+1 members.
  std::uint64_t to_move = half + 1 - f.size();
  if (to_move > gg.size())
    fail(Errc::invariant, "section3 rebalance would exhaust the intersecting side");
  gg.for_each_member([&](std::uint64_t, std::uint64_t rank) {
    if (to_move == 0) return;
    f.insert_rank(rank);
    gg.erase_rank(rank);
    --to_move;
  });
  FamilyPair p(std::move(f), std::move(gg));
  require_pair_valid(p, false);
  return p;
}

namespace {

// Shared skeleton for the two star-free generators. The star at 1 is split
// by what a member hits: sets meeting only `a_hits` go to A, sets meeting
// only `b_hits` go to B, and sets meeting both (the overlap of the two full
// families) are dealt out so side A ends with exactly `target_a` members.
// The deal alternates in colex order starting with B, switching to a plain
// fill once either side's quota is reached.
FamilyPair punctured_star_pair(const GroundSet& g, std::uint64_t a_hits, std::uint64_t b_hits,
                               const std::vector<std::uint64_t>& extra_a,
                               const std::vector<std::uint64_t>& extra_b, std::uint64_t target_a) {
  Family a(g), b(g);
  std::uint64_t overlap_total = 0;
  std::uint64_t unique_a = 0;
  for_each_kset(g.n, g.k, [&](std::uint64_t mask, std::uint64_t rank) {
    if (!(mask & 1u)) return;
    bool for_a = (mask & a_hits) != 0;
    bool for_b = (mask & b_hits) != 0;
    if (for_a && for_b) {
      ++overlap_total;
    } else if (for_a) {
      a.insert_rank(rank);
      ++unique_a;
    } else if (for_b) {
      b.insert_rank(rank);
    }
  });
  for (std::uint64_t m : extra_a) a.insert(m);
  for (std::uint64_t m : extra_b) b.insert(m);
  unique_a += extra_a.size();
  if (target_a < unique_a || target_a - unique_a > overlap_total)
    fail(Errc::precondition,
         "equitable split cannot reach the target size at n=" + std::to_string(g.n) +
             " k=" + std::to_string(g.k));
  std::uint64_t quota_a = target_a - unique_a;
  std::uint64_t quota_b = overlap_total - quota_a;
  std::uint64_t idx = 0;
  for_each_kset(g.n, g.k, [&](std::uint64_t mask, std::uint64_t rank) {
    if (!(mask & 1u) || !(mask & a_hits) || !(mask & b_hits)) return;
    bool to_a;
    if (quota_a == 0)
      to_a = false;
    else if (quota_b == 0)
      to_a = true;
    else
      to_a = (idx & 1u);  // B keeps the even positions; the floor goes to A
    ++idx;
    if (to_a) {
      a.insert_rank(rank);
      --quota_a;
    } else {
      b.insert_rank(rank);
      --quota_b;
    }
  });
  return FamilyPair(std::move(a), std::move(b));
}

}  // namespace

FamilyPair prop22_pair(int n, int k) {
  if (k < 2) fail(Errc::precondition, "prop22_pair requires k >= 2");
  if (n < 2 * k + 1) fail(Errc::precondition, "prop22_pair requires n >= 2k+1");
  GroundSet g(n, k);
  // P = [2,k+1], Q = {2} u [k+2,2k]; P n Q = {2}, 1 not in P u Q.
  std::uint64_t p_mask = low_bits(k + 1) & ~std::uint64_t{1};
  std::uint64_t q_mask = (std::uint64_t{1} << 1) | (low_bits(2 * k) & ~low_bits(k + 1));
  std::uint64_t x = choose64(n - 1, k - 1);
  std::uint64_t y = choose64(n - 2 * k, k - 1);
  std::uint64_t target_a = (x - y) / 2 + 1;
  // A holds the sets meeting Q (plus P itself); B holds the sets meeting P.
  FamilyPair p = punctured_star_pair(g, q_mask, p_mask, {p_mask}, {q_mask}, target_a);
  require_pair_valid(p, true);
  return p;
}

FamilyPair prop55_pair(int n, int k) {
  if (k < 5) fail(Errc::precondition, "prop55_pair requires k >= 5");
  if (n <= 2 * k + 1) fail(Errc::precondition, "prop55_pair requires n > 2k+1");
  GroundSet g(n, k);
  std::uint64_t p_mask = low_bits(k + 1) & ~std::uint64_t{1};        // [2,k+1]
  std::uint64_t r_mask = low_bits(2 * k) & ~low_bits(k + 1);         // [k+2,2k]
  std::vector<std::uint64_t> extra_a = {p_mask};
  std::vector<std::uint64_t> extra_b;
  for (int j = 2; j <= k + 1; ++j)
    extra_b.push_back((std::uint64_t{1} << (j - 1)) | r_mask);
  std::uint64_t x = choose64(n - 1, k - 1);
  std::uint64_t y = choose64(n - 2 * k, k - 1);
  std::uint64_t target_a = (x - y + static_cast<std::uint64_t>(k) + 1) / 2;
  // The A side's star part meets [k+2,2k], the B side's meets [2,k+1].
  FamilyPair p = punctured_star_pair(g, r_mask, p_mask, extra_a, extra_b, target_a);
  require_pair_valid(p, true);
  return p;
}

VerifyReport verify_pair(const FamilyPair& p, const std::vector<PairCheck>& checks,
                         std::optional<ExpectedSizes> expected) {
  VerifyReport report;
  for (PairCheck c : checks) {
    CheckOutcome out;
    out.check = c;
    out.pass = true;
    switch (c) {
      case PairCheck::disjoint: {
        p.a.for_each_member([&](std::uint64_t mask, std::uint64_t rank) {
          if (out.pass && p.b.contains_rank(rank)) {
            out.pass = false;
            out.witness = "shared member " + set_string(mask);
          }
        });
        break;
      }
      case PairCheck::cross: {
        if (p.a.size() * p.b.size() > kSelfCheckCross)
          fail(Errc::limit, "cross check too large for pairwise verification");
        auto bm = p.b.member_masks();
        p.a.for_each_member([&](std::uint64_t am, std::uint64_t) {
          if (!out.pass) return;
          for (std::uint64_t b : bm) {
            if ((am & b) == 0) {
              out.pass = false;
              out.witness = "disjoint members A:" + set_string(am) + " B:" + set_string(b);
              return;
            }
          }
        });
        break;
      }
      case PairCheck::star_free: {
        if (auto e = is_star(p.a)) {
          out.pass = false;
          out.witness = "A is a star at " + std::to_string(*e);
        } else if (auto e2 = is_star(p.b)) {
          out.pass = false;
          out.witness = "B is a star at " + std::to_string(*e2);
        }
        break;
      }
      case PairCheck::pyber: {
        BigInt bound = binomial(p.a.n() - 1, p.a.k() - 1);
        bound *= bound;
        BigInt product = BigInt(p.a.size()) * BigInt(p.b.size());
        if (product > bound) {
          out.pass = false;
          out.witness = "|A|*|B| = " + to_decimal(product) + " > " + to_decimal(bound);
        }
        break;
      }
      case PairCheck::sizes: {
        if (!expected) fail(Errc::usage, "sizes check requires expected sizes");
        if (p.a.size() != expected->a || p.b.size() != expected->b) {
          out.pass = false;
          out.witness = "sizes (" + std::to_string(p.a.size()) + "," + std::to_string(p.b.size()) +
                        ") != expected (" + std::to_string(expected->a) + "," +
                        std::to_string(expected->b) + ")";
        }
        break;
      }
    }
    if (!out.pass) report.all_pass = false;
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

FamilyPair construct_by_name(const std::string& name, int n, int k) {
  if (name == "half-star" || name == "half_star") return half_star_split(n, k);
  if (name == "section3") return section3_pair(n, k);
  if (name == "prop22") return prop22_pair(n, k);
  if (name == "prop55") return prop55_pair(n, k);
  fail(Errc::usage, "unknown construction '" + name + "'");
}

}  // namespace kcross
