#include "eccensus/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eccensus/arith.hpp"
#include "eccensus/sieve.hpp"

namespace eccensus::census {

using arith::u64;

namespace {

void require_interval(u64 X, u64 Y) {
  if (Y == 0 || Y > X) throw std::invalid_argument("statistics: need 0 < Y <= X");
}

}  // namespace

Theta theta_and_discrepancy(u64 X, u64 Y, u64 q, u64 a) {
  require_interval(X, Y);
  if (q == 0) throw std::invalid_argument("theta_and_discrepancy: q must be positive");
  Theta out;
  for (u64 p : arith::primes_in_interval(X, X + Y)) {
    if (p % q == a % q) out.theta += std::log(static_cast<double>(p));
  }
  out.discrepancy = out.theta - static_cast<double>(Y) / static_cast<double>(arith::euler_phi(q));
  return out;
}

BdhVariance bdh_variance_sum(u64 X, u64 Y, u64 Q) {
  require_interval(X, Y);
  if (Q == 0 || Q > Y) throw std::invalid_argument("bdh_variance_sum: need 1 <= Q <= Y");
  const auto primes = arith::primes_in_interval(X, X + Y);
  std::vector<double> logs(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) logs[i] = std::log(static_cast<double>(primes[i]));
  BdhVariance out;
  std::vector<double> bucket;
  for (u64 q = 1; q <= Q; ++q) {
    bucket.assign(q, 0.0);
    for (std::size_t i = 0; i < primes.size(); ++i) bucket[primes[i] % q] += logs[i];
    const double mean = static_cast<double>(Y) / static_cast<double>(arith::euler_phi(q));
    for (u64 a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double e = bucket[a] - mean;
      out.sum += e * e;
    }
  }
  out.comparator = static_cast<double>(Y) * static_cast<double>(Q) * std::log(static_cast<double>(X));
  out.ratio = out.sum / out.comparator;
  return out;
}

bool ResidueReconciliation::exact() const {
  std::vector<u64> merged = class_primes;
  merged.insert(merged.end(), ramified.begin(), ramified.end());
  std::sort(merged.begin(), merged.end());
  return merged == window_primes;
}

ResidueReconciliation residue_class_reconciliation(u64 X, u64 Y, u64 q) {
  require_interval(X, Y);
  if (q == 0) throw std::invalid_argument("residue_class_reconciliation: q must be positive");
  ResidueReconciliation out;
  out.q = q;
  out.window_primes = arith::primes_in_interval(X, X + Y);
  for (u64 p : out.window_primes) out.total_theta += std::log(static_cast<double>(p));
  // Walk the unit classes one at a time, as theta(X, Y; q, a) would.
  for (u64 a = 0; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    for (u64 p : out.window_primes) {
      if (p % q != a) continue;
      out.class_primes.push_back(p);
      out.unit_theta_sum += std::log(static_cast<double>(p));
    }
  }
  std::sort(out.class_primes.begin(), out.class_primes.end());
  for (u64 p : out.window_primes) {
    if (q % p == 0) {
      out.ramified.push_back(p);
      out.ramified_theta += std::log(static_cast<double>(p));
    }
  }
  return out;
}

namespace {

u64 delta_target(u64 N, u64 u) {
  if (u == 0 || N % (u * u) != 0) throw std::invalid_argument("delta_root_count: need u^2 | N");
  return 4 * (N / (u * u));
}

}  // namespace

u64 delta_root_count(u64 N, u64 u, u64 v) {
  const u64 k = delta_target(N, u);
  if (v == 0) throw std::invalid_argument("delta_root_count: v must be positive");
  // l -> l - N/u is a bijection mod v, so only the square-root count matters.
  u64 count = 1;
  for (const auto& pp : arith::factorize(v)) {
    count *= arith::count_square_roots(k % arith::ipow(pp.prime, pp.exponent), pp.prime, pp.exponent);
    if (count == 0) break;
  }
  return count;
}

u64 delta_root_count_scan(u64 N, u64 u, u64 v) {
  const u64 k = delta_target(N, u);
  if (v == 0) throw std::invalid_argument("delta_root_count_scan: v must be positive");
  const u64 c = (N / u) % v;
  u64 count = 0;
  for (u64 l = 0; l < v; ++l) {
    const u64 y = (l + v - c) % v;
    if ((y * y) % v == k % v) ++count;
  }
  return count;
}

}  // namespace eccensus::census
