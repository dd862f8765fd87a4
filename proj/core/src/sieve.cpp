#include "eccensus/sieve.hpp"

#include <algorithm>
#include <limits>

#include "eccensus/arith.hpp"

namespace eccensus::arith {

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  out.push_back(2);
  // composite[i] marks 2i+1.
  const u64 half = (n - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (u64 i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    out.push_back(p);
    for (u64 j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  return out;
}

std::vector<u64> primes_in_interval(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi <= lo + 1) return out;
  const u64 first = lo + 1;
  const u64 last = hi - 1;
  const u64 root = isqrt(last);

  // Short window with a huge base-prime range: test candidates directly.
  if (root > (u64{1} << 22) && last - first < root / 16) {
    for (u64 n = first; n <= last; ++n) {
      if (is_prime(n)) out.push_back(n);
      if (n == std::numeric_limits<u64>::max()) break;
    }
    return out;
  }

  const std::vector<u64> base = primes_up_to(root);
  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> mark;
  for (u64 seg_lo = first; seg_lo <= last;) {
    const u64 seg_hi = std::min(last, seg_lo + kSegment - 1);
    mark.assign(seg_hi - seg_lo + 1, 1);
    for (u64 p : base) {
      u64 start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (u64 m = start; m <= seg_hi; m += p) mark[m - seg_lo] = 0;
    }
    for (u64 n = seg_lo; n <= seg_hi; ++n) {
      if (n >= 2 && mark[n - seg_lo]) out.push_back(n);
    }
    if (seg_hi == last) break;
    seg_lo = seg_hi + 1;
  }
  return out;
}

}  // namespace eccensus::arith
