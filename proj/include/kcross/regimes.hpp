#ifndef KCROSS_REGIMES_HPP
#define KCROSS_REGIMES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace kcross {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n,r) with arbitrary precision; r < 0 or r > n yields 0.
BigInt binomial(long long n, long long r);

enum class Regime { ConjectureHolds, ConstructionBeats, GreyZone, Degenerate };

const char* regime_name(Regime r);

// The three decisive inequalities, evaluated exactly. Half-comparisons are
// done by doubling; the slack term in the first follows the source statement
// literally: 2 C(n-k-1,k-1) >= C(n-1,k-1) + 2.
bool eq32_holds(long long n, int k);  // Moers bound <= floor(half): conjecture holds
bool eq34_holds(long long n, int k);  // 2 C(n-k,k-1) < C(n-1,k-1): construction beats
bool eq42_holds(long long n, int k);  // strict grey zone window

struct RegimeReport {
  long long n = 0;
  int k = 0;
  Regime regime = Regime::Degenerate;
  // Exact integer witnesses.
  BigInt c_nk1_k1;  // C(n-k-1, k-1)
  BigInt c_nk_k1;   // C(n-k, k-1)
  BigInt c_n1_k1;   // C(n-1, k-1)
  bool eq32 = false, eq34 = false, eq42_strict = false;
  // Grey by complement but outside the strict window (a boundary coincidence
  // such as 2 C(n-k-1,k-1) == C(n-1,k-1) + 1).
  bool boundary = false;
  // Floating-point commentary only; never used for the decision.
  double approx_threshold_conjecture = 0.0;  // c k^2 + (2-c) k
  double approx_threshold_failure = 0.0;     // c k^2 - 2 c k + 1
};

// Total for k >= 1: Degenerate for n <= 2k, otherwise ConjectureHolds iff
// eq32, ConstructionBeats iff eq34, GreyZone otherwise (eq32 and eq34 are
// provably exclusive). The strict window is reported via eq42_strict.
RegimeReport classify(long long n, int k);

struct BoundSet {
  long long n = 0;
  int k = 0;
  BigInt ekr;               // C(n-1,k-1)
  BigInt hm;                // C(n-1,k-1) - C(n-k-1,k-1) + 1
  BigInt conjecture_value;  // floor(C(n-1,k-1)/2)
  BigInt prop41_upper;      // floor((C(n-1,k-1)+n-k-1)/2)
  BigInt fstar_value;       // floor((C(n-1,k-1)-C(n-2k,k-1))/2)+1
  BigInt prop55_value;      // floor((C(n-1,k-1)-C(n-2k,k-1)+k+1)/2)
};

// All six quantities, exact. Rejects n <= 2k.
BoundSet bounds(long long n, int k);

struct Theorem14Report {
  int k = 0;
  long long n_max = 0;
  double thr_conjecture = 0.0;   // c k^2 + (2-c) k
  double thr_failure = 0.0;      // c k^2 - 2 c k + 1
  double thr_failure_alt = 0.0;  // c (k-1)^2 + 1
  long long max_construction_beats_n = 0;  // 0 if none in range
  long long min_conjecture_holds_n = 0;    // 0 if none in range
  long long grey_lo = 0, grey_hi = 0;      // complement grey window; 0 if none
  bool contiguous = false;  // scan splits as CB-prefix, grey window, CH-suffix
  std::vector<long long> boundary_points;  // grey but not strict eq42
  std::vector<long long> violations_conjecture;   // n >= thr_conjecture but !eq32
  std::vector<long long> violations_failure;      // n <= thr_failure but !eq34
  std::vector<long long> violations_failure_alt;  // n <= thr_failure_alt but !eq34
};

// Scans 2k < n <= n_max. Requires k >= 3 and n_max > 2k.
Theorem14Report theorem14_check(int k, long long n_max);

// C(n-1,k-1) - C(n-u-1,k-1) + C(n-u-1,k-u), the size threshold of the
// diversity theorem (note C(n-u-1, n-k-1) = C(n-u-1, k-u)).
// Requires n > 2k, k > 3, 3 <= u <= k.
BigInt thm43_threshold(long long n, int k, int u);

enum class Ineq { eq_5_2, eq_5_3, eq_5_7, eq_5_12, eq_5_13, eq_5_14 };

Ineq ineq_from_name(const std::string& name);
const char* ineq_name(Ineq which);

// The inequality itself, exact, at (n,k). Requires k >= 5 and n > 2k.
bool ineq_holds(Ineq which, long long n, int k);

struct CrossoverResult {
  Ineq which{};
  int k = 0;
  long long cap = 0;
  bool found = false;
  long long n = 0;       // valid when found
  bool fails_sense = false;  // eq_5_7 searches for the first n where it FAILS
};

// Smallest n > 2k at which the inequality holds (for eq_5_7: fails), scanned
// exactly up to `cap` (default max(4k^3, 1000)). Cap exhaustion is reported
// distinctly via found == false.
CrossoverResult ineq_crossover(int k, Ineq which, long long cap = 0);

std::string to_decimal(const BigInt& v);

}  // namespace kcross

#endif  // KCROSS_REGIMES_HPP
