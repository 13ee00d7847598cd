#ifndef KCROSS_TYPES_HPP
#define KCROSS_TYPES_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcross {

// Status taxonomy shared with the C API and the CLI exit codes.
enum class Errc {
  usage = 2,         // malformed arguments
  precondition = 3,  // domain precondition violated
  inexact = 4,       // result is an interval, not a value
  invariant = 5,     // internal invariant violated
  limit = 6,         // representation cap exceeded
  parse = 7,         // malformed document
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Ground sets are capped at 64 elements so a k-set is one machine word.
inline constexpr int kMaxGroundSize = 64;
// Family membership bitsets are capped at 2^28 ranks.
inline constexpr std::uint64_t kMaxFamilyRanks = std::uint64_t{1} << 28;

inline std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// C(n,r) for 0 <= n <= 64; everything fits in uint64 (max C(64,32) < 2^63).
// Out-of-range r yields 0.
std::uint64_t choose64(int n, int r) noexcept;

// The uniformity/width pair (n, k): k-subsets of [n] = {1,...,n}.
struct GroundSet {
  int n = 0;
  int k = 0;

  GroundSet() = default;
  GroundSet(int n_, int k_) : n(n_), k(k_) {
    if (k < 1 || n < k || n > kMaxGroundSize)
      fail(Errc::usage, "ground set requires 1 <= k <= n <= 64, got n=" + std::to_string(n_) +
                            " k=" + std::to_string(k_));
  }

  bool operator==(const GroundSet&) const = default;

  std::uint64_t num_ksets() const { return choose64(n, k); }
};

// A k-subset of [n] as a bit mask: bit i-1 set <=> element i present.
struct KSet {
  std::uint64_t bits = 0;

  int size() const { return std::popcount(bits); }
  bool contains(int element) const { return (bits >> (element - 1)) & 1u; }
};

// Enumerates all k-subsets of [n] as masks in colexicographic order
// (= increasing numeric order), calling f(mask, rank).
template <class F>
void for_each_kset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint64_t{0}, std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = low_bits(n);
  std::uint64_t mask = low_bits(k);
  std::uint64_t rank = 0;
  while (true) {
    f(mask, rank);
    ++rank;
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    if (r > limit || r < mask) break;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (mask > limit) break;
  }
}

}  // namespace kcross

#endif  // KCROSS_TYPES_HPP
