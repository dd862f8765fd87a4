#include "eccensus/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "eccensus/sieve.hpp"

namespace eccensus::arith {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

bool miller_rabin_round(u64 n, u64 d, unsigned s, u64 a) {
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    const i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("invmod: argument not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (u64 a : kSmall) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    std::vector<u64> big;
    factor_rec(n, big);
    std::sort(big.begin(), big.end());
    for (u64 p : big) {
      if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
      } else {
        out.push_back({p, 1});
      }
    }
  }
  return out;
}

u64 reconstruct(const Factorization& f) {
  u64 n = 1;
  for (const auto& pp : f) n *= ipow(pp.prime, pp.exponent);
  return n;
}

Valuation valuation(u64 n, u64 ell) {
  if (n == 0) throw std::invalid_argument("valuation: n must be positive");
  if (!is_prime(ell)) throw std::invalid_argument("valuation: ell must be prime");
  Valuation v{0, n};
  while (v.free_part % ell == 0) {
    v.free_part /= ell;
    ++v.exponent;
  }
  return v;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& pp : f) phi *= (pp.prime - 1) * ipow(pp.prime, pp.exponent - 1);
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

int moebius(const Factorization& f) {
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

int moebius(u64 n) { return moebius(factorize(n)); }

int jacobi(u64 a, u64 n) {
  if (n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd");
  a %= n;
  int result = 1;
  while (a != 0) {
    const int tz = std::countr_zero(a);
    a >>= tz;
    if ((tz & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  u64 m;
  if (n < 0) {
    m = static_cast<u64>(-(static_cast<i128>(n)));
    if (a < 0) result = -result;
  } else {
    m = static_cast<u64>(n);
  }
  const int tz = std::countr_zero(m);
  if (tz > 0) {
    if (a % 2 == 0) return 0;
    m >>= tz;
    const u64 r8 = mod_floor(a, 8);
    if ((tz & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  if (m == 1) return result;
  return result * jacobi(mod_floor(a, m), m);
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    const u64 b = powmod(c, u64{1} << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

u64 count_square_roots(u64 k, u64 q, unsigned e) {
  const u64 modulus = ipow(q, e);
  k %= modulus;
  if (k == 0) return ipow(q, e / 2);
  unsigned t = 0;
  while (k % q == 0) {
    k /= q;
    ++t;
  }
  if (t % 2 == 1) return 0;
  // y = q^{t/2} y' with y' a unit square root of k modulo q^{e-t}; each such
  // residue class lifts to q^{t/2} values of y modulo q^e.
  const unsigned rest = e - t;
  u64 unit_roots;
  if (q == 2) {
    if (rest == 1) {
      unit_roots = 1;
    } else if (rest == 2) {
      unit_roots = k % 4 == 1 ? 2 : 0;
    } else {
      unit_roots = k % 8 == 1 ? 4 : 0;
    }
  } else {
    unit_roots = jacobi(k % q, q) == 1 ? 2 : 0;
  }
  return unit_roots * ipow(q, t / 2);
}

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace eccensus::arith
