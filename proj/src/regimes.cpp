#include "kcross/regimes.hpp"

#include <algorithm>
#include <cmath>

#include "kcross/types.hpp"

namespace kcross {

BigInt binomial(long long n, long long r) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= (n - r + i);
    result /= i;  // exact: prefix products are binomial coefficients
  }
  return result;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::ConjectureHolds: return "ConjectureHolds";
    case Regime::ConstructionBeats: return "ConstructionBeats";
    case Regime::GreyZone: return "GreyZone";
    case Regime::Degenerate: return "Degenerate";
  }
  return "?";
}

bool eq32_holds(long long n, int k) {
  return 2 * binomial(n - k - 1, k - 1) >= binomial(n - 1, k - 1) + 2;
}

bool eq34_holds(long long n, int k) {
  return 2 * binomial(n - k, k - 1) < binomial(n - 1, k - 1);
}

bool eq42_holds(long long n, int k) {
  BigInt x = binomial(n - 1, k - 1);
  return 2 * binomial(n - k - 1, k - 1) < x && x < 2 * binomial(n - k, k - 1);
}

namespace {
constexpr double kLog2E = 1.4426950408889634074;  // c = log2(e)
}

RegimeReport classify(long long n, int k) {
  if (k < 1) fail(Errc::usage, "classify requires k >= 1");
  RegimeReport r;
  r.n = n;
  r.k = k;
  r.c_nk1_k1 = binomial(n - k - 1, k - 1);
  r.c_nk_k1 = binomial(n - k, k - 1);
  r.c_n1_k1 = binomial(n - 1, k - 1);
  double kk = static_cast<double>(k);
  r.approx_threshold_conjecture = kLog2E * kk * kk + (2.0 - kLog2E) * kk;
  r.approx_threshold_failure = kLog2E * kk * kk - 2.0 * kLog2E * kk + 1.0;
  if (n <= 2LL * k) {
    r.regime = Regime::Degenerate;
    return r;
  }
  r.eq32 = 2 * r.c_nk1_k1 >= r.c_n1_k1 + 2;
  r.eq34 = 2 * r.c_nk_k1 < r.c_n1_k1;
  r.eq42_strict = 2 * r.c_nk1_k1 < r.c_n1_k1 && r.c_n1_k1 < 2 * r.c_nk_k1;
  if (r.eq32 && r.eq34) fail(Errc::invariant, "eq32 and eq34 both hold");  // provably impossible
  if (r.eq32)
    r.regime = Regime::ConjectureHolds;
  else if (r.eq34)
    r.regime = Regime::ConstructionBeats;
  else {
    // Complement of the two decided regimes. Almost always the strict window;
    // boundary coincidences (e.g. (12,3), where 2 C(8,2) = C(11,2)+1) fall
    // here too and are flagged.
    r.regime = Regime::GreyZone;
    r.boundary = !r.eq42_strict;
  }
  return r;
}

BoundSet bounds(long long n, int k) {
  if (k < 1) fail(Errc::usage, "bounds requires k >= 1");
  if (n <= 2LL * k) fail(Errc::precondition, "bounds requires n > 2k");
  BoundSet b;
  b.n = n;
  b.k = k;
  b.ekr = binomial(n - 1, k - 1);
  b.hm = b.ekr - binomial(n - k - 1, k - 1) + 1;
  b.conjecture_value = b.ekr / 2;
  b.prop41_upper = (b.ekr + (n - k - 1)) / 2;
  BigInt core = b.ekr - binomial(n - 2LL * k, k - 1);
  b.fstar_value = core / 2 + 1;
  b.prop55_value = (core + k + 1) / 2;
  return b;
}

Theorem14Report theorem14_check(int k, long long n_max) {
  if (k < 3) fail(Errc::usage, "theorem14_check requires k >= 3");
  if (n_max <= 2LL * k) fail(Errc::precondition, "theorem14_check requires n_max > 2k");
  Theorem14Report rep;
  rep.k = k;
  rep.n_max = n_max;
  double kk = static_cast<double>(k);
  rep.thr_conjecture = kLog2E * kk * kk + (2.0 - kLog2E) * kk;
  rep.thr_failure = kLog2E * kk * kk - 2.0 * kLog2E * kk + 1.0;
  rep.thr_failure_alt = kLog2E * (kk - 1.0) * (kk - 1.0) + 1.0;

  bool seen_non_cb = false, seen_ch = false;
  rep.contiguous = true;
  for (long long n = 2LL * k + 1; n <= n_max; ++n) {
    bool e32 = eq32_holds(n, k);
    bool e34 = eq34_holds(n, k);
    if (static_cast<double>(n) >= rep.thr_conjecture && !e32) rep.violations_conjecture.push_back(n);
    if (static_cast<double>(n) <= rep.thr_failure && !e34) rep.violations_failure.push_back(n);
    if (static_cast<double>(n) <= rep.thr_failure_alt && !e34) rep.violations_failure_alt.push_back(n);
    if (e34) {
      rep.max_construction_beats_n = n;
      if (seen_non_cb) rep.contiguous = false;
    } else {
      seen_non_cb = true;
    }
    if (e32) {
      if (rep.min_conjecture_holds_n == 0) rep.min_conjecture_holds_n = n;
      seen_ch = true;
    } else {
      if (seen_ch) rep.contiguous = false;
      if (!e34) {
        if (rep.grey_lo == 0) rep.grey_lo = n;
        rep.grey_hi = n;
        if (!eq42_holds(n, k)) rep.boundary_points.push_back(n);
      }
    }
  }
  return rep;
}

BigInt thm43_threshold(long long n, int k, int u) {
  if (k <= 3) fail(Errc::usage, "threshold requires k > 3");
  if (n <= 2LL * k) fail(Errc::precondition, "threshold requires n > 2k");
  if (u < 3 || u > k) fail(Errc::precondition, "threshold requires 3 <= u <= k");
  // C(n-u-1, n-k-1) = C(n-u-1, k-u)
  return binomial(n - 1, k - 1) - binomial(n - u - 1, k - 1) + binomial(n - u - 1, k - u);
}

Ineq ineq_from_name(const std::string& name) {
  if (name == "eq_5_2") return Ineq::eq_5_2;
  if (name == "eq_5_3") return Ineq::eq_5_3;
  if (name == "eq_5_7") return Ineq::eq_5_7;
  if (name == "eq_5_12") return Ineq::eq_5_12;
  if (name == "eq_5_13") return Ineq::eq_5_13;
  if (name == "eq_5_14") return Ineq::eq_5_14;
  fail(Errc::usage, "unknown inequality '" + name + "'");
}

const char* ineq_name(Ineq which) {
  switch (which) {
    case Ineq::eq_5_2: return "eq_5_2";
    case Ineq::eq_5_3: return "eq_5_3";
    case Ineq::eq_5_7: return "eq_5_7";
    case Ineq::eq_5_12: return "eq_5_12";
    case Ineq::eq_5_13: return "eq_5_13";
    case Ineq::eq_5_14: return "eq_5_14";
  }
  return "?";
}

bool ineq_holds(Ineq which, long long n, int k) {
  if (k < 5) fail(Errc::precondition, "the section-5 inequalities assume k >= 5");
  if (n <= 2LL * k) fail(Errc::precondition, "ineq_holds requires n > 2k");
  switch (which) {
    case Ineq::eq_5_2:
      // Sufficiency form: half the star-free lower-bound total dominates the
      // u=3 diversity threshold.
      return binomial(n - 1, k - 1) - binomial(n - 2LL * k, k - 1) >= 2 * thm43_threshold(n, k, 3);
    case Ineq::eq_5_3: {
      BigInt sum = 0;
      for (int i = 2; i <= 10; ++i) sum += binomial(n - i, k - 2);
      return sum > 6 * binomial(n - 2, k - 2);
    }
    case Ineq::eq_5_7:
      return 2 * binomial(n - 4, k - 4) > binomial(n - 2LL * k, k - 2);
    case Ineq::eq_5_12: {
      BigInt lhs = binomial(n - 1, k - 1) - binomial(n - k, k - 1) + binomial(n - k - 2, k - 3);
      return 2 * lhs < binomial(n - 1, k - 1) - binomial(n - 2LL * k, k - 1) - 1;
    }
    case Ineq::eq_5_13: {
      BigInt lhs = 0, rhs = 0;
      for (int j = 2; j <= k; ++j) lhs += binomial(n - j, k - 2);
      for (int j = k + 1; j <= 2 * k; ++j) rhs += binomial(n - j, k - 2);
      return lhs < rhs - (2 * binomial(n - k - 2, k - 3) + 1);
    }
    case Ineq::eq_5_14: {
      for (int j = 2; j <= k; ++j)
        if ((k + 2) * binomial(n - k - j, k - 2) <= (k + 1) * binomial(n - j, k - 2)) return false;
      return true;
    }
  }
  fail(Errc::usage, "bad inequality");
}

CrossoverResult ineq_crossover(int k, Ineq which, long long cap) {
  if (k < 5) fail(Errc::precondition, "the section-5 inequalities assume k >= 5");
  if (cap <= 0) cap = std::max<long long>(4LL * k * k * k, 1000);
  CrossoverResult res;
  res.which = which;
  res.k = k;
  res.cap = cap;
  res.fails_sense = (which == Ineq::eq_5_7);
  for (long long n = 2LL * k + 1; n <= cap; ++n) {
    bool h = ineq_holds(which, n, k);
    if (res.fails_sense ? !h : h) {
      res.found = true;
      res.n = n;
      return res;
    }
  }
  return res;  // cap exhausted, reported distinctly from "never"
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace kcross
