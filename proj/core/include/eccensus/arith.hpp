#pragma once

// Integer and multiplicative-function primitives. All inputs fit in 64 bits;
// intermediate products go through unsigned __int128.

#include <cstdint>
#include <optional>
#include <vector>

namespace eccensus::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by strictly increasing prime.
using Factorization = std::vector<PrimePower>;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

/// Floor of the square root.
u64 isqrt(u64 n);
bool is_perfect_square(u64 n);

/// Deterministic Miller-Rabin; exact for every n < 2^64.
bool is_prime(u64 n);

/// Trial division below 10^6, then Pollard rho (Brent) on the cofactor.
Factorization factorize(u64 n);
u64 reconstruct(const Factorization& f);

struct Valuation {
  unsigned exponent = 0;  // nu_ell(n)
  u64 free_part = 1;      // n / ell^nu_ell(n)
};

/// n = ell^exponent * free_part with ell not dividing free_part.
/// Throws std::invalid_argument if ell is not prime or n == 0.
Valuation valuation(u64 n, u64 ell);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);
int moebius(u64 n);
int moebius(const Factorization& f);

/// Full Kronecker symbol (a/n) for any integers; (a/0) = 1 if a = +-1 else 0.
int kronecker(i64 a, i64 n);
/// Jacobi symbol (a/n) for odd n.
int jacobi(u64 a, u64 n);

std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

u64 ipow(u64 base, unsigned exp);
u64 lcm(u64 a, u64 b);

/// Some y with y^2 = a mod p (Tonelli-Shanks), or nullopt for a non-residue.
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);

/// #{y mod q^e : y^2 = k mod q^e} for prime q, from the valuation of k and
/// the unit-square criterion (Hensel). Works for q = 2.
u64 count_square_roots(u64 k, u64 q, unsigned e);

/// Reduces a signed value into [0, m).
inline u64 mod_floor(i64 a, u64 m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

}  // namespace eccensus::arith
