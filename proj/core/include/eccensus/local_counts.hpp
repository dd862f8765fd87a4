#pragma once

// Congruence counts behind the truncated K0 series:
//
//   C_N(a, n, f)       = { b in (Z/4nf^2)^* : D_N(b) = a f^2 mod 4nf^2 },
//   C_N^(l)(a, n, f)   = the same condition modulo l^{nu_l(4nf^2)},
//
// with D_N(b) = (b + 1 - N)^2 - 4b = (b - (N + 1))^2 - 4N. Everything is
// computed both by direct enumeration and by square-root counting so the two
// can be compared.

#include <cstdint>
#include <string>

#include "eccensus/rational.hpp"

namespace eccensus::constants {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class FormulaVariant { original, erratum };

std::string to_string(FormulaVariant v);
/// "original" or "erratum"; throws std::invalid_argument otherwise.
FormulaVariant parse_variant(const std::string& text);

/// Largest modulus 4nf^2 accepted by the enumeration routes.
inline constexpr u64 kEnumerationLimit = 100'000'000;

/// #C_N(a, n, f) by walking every b mod 4nf^2. N and f odd.
u64 big_C_count_direct(u64 N, u64 a, u64 n, u64 f);
/// #C_N(a, n, f) as a product of local counts (CRT). N and f odd.
u64 big_C_count(u64 N, u64 a, u64 n, u64 f);

/// #C_N^(l)(a, n, f) from root counting (odd l) or a 2-adic scan (l = 2).
u64 local_C_count(u64 N, u64 a, u64 n, u64 f, u64 ell);
/// #C_N^(l)(a, n, f) by enumerating units modulo l^{nu_l(4nf^2)}.
u64 local_C_enumerate(u64 N, u64 a, u64 n, u64 f, u64 ell);

/// Closed form of #C_N^(l)(1, 1, l^alpha), l odd:
///   1 + (N(N-1)^2 / l)                 if l does not divide N,
///   2 l^{nu/2}                         if 1 <= nu < 2 alpha, nu even, (N_(l)/l) = 1,
///   l^alpha                            if 2 alpha <= nu,
///   0                                  otherwise,
/// where nu = nu_l(N) and N_(l) is the l-free part of N.
u64 local_C_closed(u64 N, u64 ell, unsigned alpha);

/// The 2-adic weight S_2(n, a) in {0, 2, 4}; requires a = 1 mod 4.
u64 s2_closed(u64 n, u64 a);

/// Direct #C_N^(2)(a, n, f) against 2 S_2(n, a): the two disagree by a factor
/// of two wherever S_2 is nonzero, so this reports rather than asserts.
struct TwoAdicComparison {
  u64 enumerated = 0;
  u64 doubled_s2 = 0;
  bool equal() const { return enumerated == doubled_s2; }
};
TwoAdicComparison compare_two_adic(u64 N, u64 a, u64 n, u64 f);

/// c_{N,f}(n) = sum over a in (Z/4n)^*, a = 1 mod 4, of
///   (a/n) S_2(n, a) prod_{l | n odd} #C_N^(l)(a, n, f),
/// with every local count enumerated. Brute-force oracle.
i64 c_char_sum(u64 N, u64 f, u64 n);

/// c_{N,f}(1) = S_2(1, 1) = 2: the constant dividing every brute-force c value
/// before comparison with the closed forms below.
inline constexpr i64 kCharSumNormalization = 2;

/// Closed form of c_{N,f}(l^alpha) / l^{alpha-1} divided by #C_N^(l)(1,1,f)
/// when l | f (the bracketed multiplier), and the full value otherwise.
/// l = 2 gives (-1)^alpha * 2.
i64 c_closed_bracket(u64 N, u64 f, u64 ell, unsigned alpha, FormulaVariant v);

/// Closed form of c_{N,f}(l^alpha) / l^{alpha-1} (normalized so that the
/// brute-force value divided by kCharSumNormalization matches).
ExactRational c_closed_prime_power(u64 N, u64 f, u64 ell, unsigned alpha, FormulaVariant v);

/// The case selector of the closed form, for reporting.
enum class CharSumCase {
  two,                // l = 2
  divides_f_only,     // l | f, l does not divide N
  divides_N_only,     // l | N, l does not divide f
  coprime,            // l does not divide N f
  f_below_half,       // l | (N, f), 2 nu(f) < nu(N)
  f_above_half,       // l | (N, f), nu(N) < 2 nu(f)
  balanced,           // l | (N, f), nu(N) = 2 nu(f): the corrected case
};
CharSumCase char_sum_case(u64 N, u64 f, u64 ell);
std::string to_string(CharSumCase c);

}  // namespace eccensus::constants
