#include "eccensus/local_counts.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "eccensus/arith.hpp"

namespace eccensus::constants {

using arith::u128;

namespace {

void require_odd(u64 N, u64 f, const char* who) {
  if (N % 2 == 0 || f % 2 == 0) throw std::invalid_argument(std::string(who) + ": N and f must be odd");
}

// D_N(b) mod M, using D_N(b) = (b - (N + 1))^2 - 4N.
u64 disc_mod(u64 N, u64 b, u64 M) {
  const u64 shift = (N + 1) % M;
  const u64 y = (b % M + M - shift) % M;
  const u64 sq = static_cast<u64>(static_cast<u128>(y) * y % M);
  const u64 four_n = static_cast<u64>(static_cast<u128>(4) * N % M);
  return (sq + M - four_n) % M;
}

u64 mul_mod(u64 a, u64 b, u64 M) { return static_cast<u64>(static_cast<u128>(a % M) * (b % M) % M); }

unsigned nu(u64 n, u64 ell) {
  unsigned e = 0;
  while (n % ell == 0) {
    n /= ell;
    ++e;
  }
  return e;
}

// Exponent of ell in 4 n f^2 (f odd).
unsigned local_exponent(u64 n, u64 f, u64 ell) {
  return ell == 2 ? 2 + nu(n, 2) : nu(n, ell) + 2 * nu(f, ell);
}

// hist[r] = #{b unit mod ell^e : D_N(b) = r}.
std::vector<u64> disc_histogram(u64 N, u64 ell, unsigned e) {
  const u64 q = arith::ipow(ell, e);
  if (q > kEnumerationLimit) throw std::invalid_argument("local enumeration modulus too large");
  std::vector<u64> hist(q, 0);
  for (u64 b = 1; b < q; ++b) {
    if (b % ell == 0) continue;
    ++hist[disc_mod(N, b, q)];
  }
  return hist;
}

int legendre(i64 a, u64 ell) { return arith::kronecker(a, static_cast<i64>(ell)); }

}  // namespace

std::string to_string(FormulaVariant v) { return v == FormulaVariant::original ? "original" : "erratum"; }

FormulaVariant parse_variant(const std::string& text) {
  if (text == "original") return FormulaVariant::original;
  if (text == "erratum") return FormulaVariant::erratum;
  throw std::invalid_argument("unknown formula variant '" + text + "' (expected original or erratum)");
}

u64 big_C_count_direct(u64 N, u64 a, u64 n, u64 f) {
  require_odd(N, f, "big_C_count_direct");
  if (n == 0) throw std::invalid_argument("big_C_count_direct: n must be positive");
  const u128 M128 = static_cast<u128>(4) * n * f * f;
  if (M128 > kEnumerationLimit) throw std::invalid_argument("big_C_count_direct: modulus too large");
  const u64 M = static_cast<u64>(M128);
  const u64 target = mul_mod(a, f * f, M);
  u64 count = 0;
  for (u64 b = 1; b < M; b += 2) {
    if (std::gcd(b, M) != 1) continue;
    if (disc_mod(N, b, M) == target) ++count;
  }
  return count;
}

u64 local_C_enumerate(u64 N, u64 a, u64 n, u64 f, u64 ell) {
  require_odd(N, f, "local_C_enumerate");
  const unsigned e = local_exponent(n, f, ell);
  if (e == 0) return 1;
  const u64 q = arith::ipow(ell, e);
  if (q > kEnumerationLimit) throw std::invalid_argument("local_C_enumerate: modulus too large");
  const u64 target = mul_mod(a, mul_mod(f, f, q), q);
  u64 count = 0;
  for (u64 b = 1; b < q; ++b) {
    if (b % ell != 0 && disc_mod(N, b, q) == target) ++count;
  }
  return count;
}

u64 local_C_count(u64 N, u64 a, u64 n, u64 f, u64 ell) {
  require_odd(N, f, "local_C_count");
  if (ell == 2) return local_C_enumerate(N, a, n, f, 2);
  const unsigned e = local_exponent(n, f, ell);
  if (e == 0) return 1;
  // y = b - (N + 1) runs over all residues; b is a unit iff y != -(N + 1) mod ell.
  const u64 q = arith::ipow(ell, e);
  const u64 k = (mul_mod(a, mul_mod(f, f, q), q) + mul_mod(4, N, q)) % q;
  const u64 roots = arith::count_square_roots(k, ell, e);
  if (roots == 0) return 0;
  const u64 c = (ell - (N + 1) % ell) % ell;  // residue of -(N + 1)
  u64 excluded;
  if (k % ell != 0) {
    // Two unit roots, one above each square root of k mod ell; c matches one
    // of them exactly when c^2 = k mod ell (c = 0 is impossible here).
    excluded = (c != 0 && mul_mod(c, c, ell) == k % ell) ? 1 : 0;
  } else {
    // Every root is divisible by ell.
    excluded = c == 0 ? roots : 0;
  }
  return roots - excluded;
}

u64 big_C_count(u64 N, u64 a, u64 n, u64 f) {
  require_odd(N, f, "big_C_count");
  if (n == 0) throw std::invalid_argument("big_C_count: n must be positive");
  u64 total = local_C_count(N, a, n, f, 2);
  for (const auto& pp : arith::factorize(n * f)) {
    if (pp.prime == 2 || total == 0) continue;
    total *= local_C_count(N, a, n, f, pp.prime);
  }
  return total;
}

u64 local_C_closed(u64 N, u64 ell, unsigned alpha) {
  if (ell == 2 || !arith::is_prime(ell)) throw std::invalid_argument("local_C_closed: ell must be an odd prime");
  if (N % 2 == 0) throw std::invalid_argument("local_C_closed: N must be odd");
  if (alpha == 0) throw std::invalid_argument("local_C_closed: alpha must be positive");
  const auto v = arith::valuation(N, ell);
  if (v.exponent == 0) {
    const u64 r = mul_mod(N, mul_mod(N - 1, N - 1, ell), ell);
    return static_cast<u64>(1 + legendre(static_cast<i64>(r), ell));
  }
  if (2 * alpha <= v.exponent) return arith::ipow(ell, alpha);
  if (v.exponent % 2 == 0 && legendre(static_cast<i64>(v.free_part % ell), ell) == 1) {
    return 2 * arith::ipow(ell, v.exponent / 2);
  }
  return 0;
}

u64 s2_closed(u64 n, u64 a) {
  if (n == 0) throw std::invalid_argument("s2_closed: n must be positive");
  if (a % 4 != 1) throw std::invalid_argument("s2_closed: a must be 1 mod 4");
  if (n % 2 == 1) return 2;
  return a % 8 == 5 ? 4 : 0;
}

TwoAdicComparison compare_two_adic(u64 N, u64 a, u64 n, u64 f) {
  return {local_C_enumerate(N, a, n, f, 2), 2 * s2_closed(n, a)};
}

i64 c_char_sum(u64 N, u64 f, u64 n) {
  require_odd(N, f, "c_char_sum");
  if (n == 0) throw std::invalid_argument("c_char_sum: n must be positive");
  struct Local {
    u64 modulus;
    u64 f2;
    std::vector<u64> hist;
  };
  std::vector<Local> locals;
  for (const auto& pp : arith::factorize(n)) {
    if (pp.prime == 2) continue;
    const unsigned e = local_exponent(n, f, pp.prime);
    const u64 q = arith::ipow(pp.prime, e);
    locals.push_back({q, mul_mod(f, f, q), disc_histogram(N, pp.prime, e)});
  }
  const u64 M = 4 * n;
  i64 total = 0;
  for (u64 a = 1; a <= M; a += 4) {
    if (std::gcd(a, M) != 1) continue;
    const int chi = arith::kronecker(static_cast<i64>(a), static_cast<i64>(n));
    if (chi == 0) continue;
    i64 term = chi * static_cast<i64>(s2_closed(n, a));
    for (const auto& loc : locals) {
      term *= static_cast<i64>(loc.hist[mul_mod(a, loc.f2, loc.modulus)]);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

CharSumCase char_sum_case(u64 N, u64 f, u64 ell) {
  require_odd(N, f, "char_sum_case");
  if (!arith::is_prime(ell)) throw std::invalid_argument("char_sum_case: ell must be prime");
  if (ell == 2) return CharSumCase::two;
  const unsigned vN = nu(N, ell);
  const unsigned vf = nu(f, ell);
  if (vf > 0 && vN == 0) return CharSumCase::divides_f_only;
  if (vN > 0 && vf == 0) return CharSumCase::divides_N_only;
  if (vN == 0) return CharSumCase::coprime;
  if (2 * vf < vN) return CharSumCase::f_below_half;
  if (vN < 2 * vf) return CharSumCase::f_above_half;
  return CharSumCase::balanced;
}

std::string to_string(CharSumCase c) {
  switch (c) {
    case CharSumCase::two: return "two";
    case CharSumCase::divides_f_only: return "divides_f_only";
    case CharSumCase::divides_N_only: return "divides_N_only";
    case CharSumCase::coprime: return "coprime";
    case CharSumCase::f_below_half: return "f_below_half";
    case CharSumCase::f_above_half: return "f_above_half";
    case CharSumCase::balanced: return "balanced";
  }
  return "unknown";
}

i64 c_closed_bracket(u64 N, u64 f, u64 ell, unsigned alpha, FormulaVariant v) {
  if (alpha == 0) throw std::invalid_argument("c_closed_bracket: alpha must be positive");
  const bool even = alpha % 2 == 0;
  const i64 l = static_cast<i64>(ell);
  const i64 Ni = static_cast<i64>(N);
  switch (char_sum_case(N, f, ell)) {
    case CharSumCase::two:
      return even ? 2 : -2;
    case CharSumCase::divides_f_only:
    case CharSumCase::f_above_half:
      return even ? l - 1 : 0;
    case CharSumCase::divides_N_only:
      return l - 2;
    case CharSumCase::coprime: {
      const int chi1 = legendre(Ni - 1, ell);
      return even ? l - 1 - legendre(Ni, ell) - chi1 * chi1 : -1 - chi1 * chi1;
    }
    case CharSumCase::f_below_half:
      return l - 1;
    case CharSumCase::balanced: {
      const i64 free = static_cast<i64>(arith::valuation(N, ell).free_part);
      const int chi_plus = legendre(free, ell);
      if (v == FormulaVariant::erratum) return even ? l - 1 - chi_plus : -1;
      const int chi_minus = legendre(-free, ell);
      return even ? l - 1 - chi_plus + chi_minus : chi_minus - 1;
    }
  }
  throw std::logic_error("c_closed_bracket: unreachable");
}

ExactRational c_closed_prime_power(u64 N, u64 f, u64 ell, unsigned alpha, FormulaVariant v) {
  const i64 bracket = c_closed_bracket(N, f, ell, alpha, v);
  if (ell != 2 && f % ell == 0) {
    return ExactRational(bracket * static_cast<i64>(local_C_closed(N, ell, nu(f, ell))));
  }
  return ExactRational(bracket);
}

}  // namespace eccensus::constants
