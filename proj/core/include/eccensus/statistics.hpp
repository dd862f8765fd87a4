#pragma once

// Prime statistics in short intervals: the log-weighted count theta over a
// residue class, its discrepancy from Y / phi(q), the variance sum over
// moduli q <= Q, and the quadratic root counts Delta behind the
// Brun-Titchmarsh step.

#include <cstdint>
#include <vector>

namespace eccensus::census {

struct Theta {
  double theta = 0.0;        // sum of log p, X < p < X + Y, p = a mod q
  double discrepancy = 0.0;  // theta - Y / phi(q)
};

Theta theta_and_discrepancy(std::uint64_t X, std::uint64_t Y, std::uint64_t q, std::uint64_t a);

struct BdhVariance {
  double sum = 0.0;         // sum_{q <= Q} sum_{(a,q)=1} E(X, Y; q, a)^2
  double comparator = 0.0;  // Y Q log X
  double ratio = 0.0;
};

BdhVariance bdh_variance_sum(std::uint64_t X, std::uint64_t Y, std::uint64_t Q);

/// Splitting of the interval primes by residue class modulo q.
struct ResidueReconciliation {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> window_primes;  // X < p < X + Y
  std::vector<std::uint64_t> class_primes;   // union over units a, sorted
  std::vector<std::uint64_t> ramified;       // window primes dividing q
  double unit_theta_sum = 0.0;               // sum over units a of theta(q, a)
  double ramified_theta = 0.0;
  double total_theta = 0.0;                  // theta(X, Y; 1, 0)
  /// Every window prime lands in exactly one unit class or divides q.
  bool exact() const;
};

ResidueReconciliation residue_class_reconciliation(std::uint64_t X, std::uint64_t Y, std::uint64_t q);

/// #{l mod v : (l - N/u)^2 = 4N/u^2 mod v}, multiplicative over the prime
/// powers of v. Throws std::invalid_argument unless u^2 | N.
std::uint64_t delta_root_count(std::uint64_t N, std::uint64_t u, std::uint64_t v);
/// The same count by scanning every l mod v (test oracle).
std::uint64_t delta_root_count_scan(std::uint64_t N, std::uint64_t u, std::uint64_t v);

}  // namespace eccensus::census
