#pragma once

#include <cstdint>
#include <vector>

namespace eccensus::arith {

/// All primes p <= n (plain sieve of Eratosthenes over odd numbers).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Primes p with lo < p < hi (open interval), by segmented sieve.
/// Very short windows far above 2^40 fall back to per-candidate Miller-Rabin.
std::vector<std::uint64_t> primes_in_interval(std::uint64_t lo, std::uint64_t hi);

}  // namespace eccensus::arith
