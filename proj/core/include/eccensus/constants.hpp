#pragma once

// Euler products K(N), K(N, m), K(G) and K0(N, m), evaluated two ways: the
// truncated defining series (exact rational) and the Euler product (exact
// finite part times a floating-point product over l not dividing N).
//
// Both the originally published formulas and the corrected ones are kept;
// FormulaVariant::erratum is the one that agrees with brute force.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eccensus/curves.hpp"
#include "eccensus/local_counts.hpp"
#include "eccensus/rational.hpp"

namespace eccensus::constants {

using curves::GroupShape;

struct TruncationParams {
  u64 U = 10'000;  // n <= U
  u64 V = 30;      // f = m g with g <= V
  u64 L = 10'000;  // primes l <= L in infinite products

  /// Throws std::invalid_argument unless U, V >= 1 and L >= 3.
  void validate() const;
};

/// Exact product over l | N (or the relevant finite set of primes) times a
/// truncated double-precision product over l not dividing N, l <= L.
/// The untruncated value lies in [value() * (1 - tail_bound), value()].
struct EulerValue {
  ExactRational finite;
  double tail = 1.0;
  double tail_bound = 0.0;
  double value() const { return finite.to_double() * tail; }
};

enum class FactorKind { F0, F1, F2, F3, F4, F5, F6, F7, F8, Klocal };
std::string to_string(FactorKind k);
FactorKind parse_factor_kind(const std::string& text);

/// Local factors at an odd prime l. `aux` is f for F2, m for F5 and Klocal,
/// and ignored otherwise. Preconditions (l | N for F4..F7, l | aux, ...)
/// throw std::invalid_argument when violated.
ExactRational f_factor(FactorKind kind, u64 ell, u64 N, u64 aux, FormulaVariant v);

/// Factor of K(N) at a prime l not dividing N (l = 2 gives 2/3 for odd N):
/// 1 - (((N-1)/l)^2 l + 1) / ((l + 1)(l - 1)^2).
ExactRational coprime_factor(u64 ell, u64 N);

/// Factor of K(N) at a prime l | N.
ExactRational K_of_N_local(u64 ell, u64 N, FormulaVariant v);

/// Product over l not dividing N, l <= L, of coprime_factor, with the bound
/// 1/(L - 1) on the relative error of stopping at L.
EulerValue coprime_product(u64 N, u64 L);

EulerValue K_of_N(u64 N, FormulaVariant v, u64 L);
ExactRational K_of_N_m(u64 N, u64 m, FormulaVariant v);
EulerValue K_of_G(const GroupShape& G, FormulaVariant v, u64 L);

/// N / (phi(N) m^2) K(N) K(N, m).
EulerValue K0_euler(u64 N, u64 m, FormulaVariant v, u64 L);

/// The defining triple series cut at f <= mV and n <= U:
///   sum_{f <= mV, m | f, f odd} 1/f sum_{n <= U} 1/(n phi(4nf^2))
///       sum_{a <= 4n, a = 1 mod 4} (a/n) #C_N(a, n, f),
/// with the inner a-sum split by CRT into local character sums.
ExactRational K0_truncated(u64 N, u64 m, const TruncationParams& t);

/// Inner a-sum of K0_truncated for one (n, f), assembled from local sums.
i64 K0_inner_sum(u64 N, u64 n, u64 f);
/// Same sum taken literally over a with big_C_count (test oracle).
i64 K0_inner_sum_literal(u64 N, u64 n, u64 f);

/// Local factor of the n-series at an odd prime l,
///   1 + sum_{alpha >= 1} w_alpha c_{N,f}(l^alpha) (normalized),
/// summed in closed form from the parity-periodic closed values. For l | f
/// the #C_N^(l)(1,1,f) factor cancels against the weight and is left out.
ExactRational local_n_series(u64 N, u64 f, u64 ell, FormulaVariant v);
/// The F0 / F1 / F2 factor the n-series at l is supposed to equal.
ExactRational expected_n_factor(u64 N, u64 f, u64 ell, FormulaVariant v);
bool local_n_sum_check(u64 N, u64 f, u64 ell, FormulaVariant v);
/// The same series at l = 2: sum_{nu >= 0} 2 c(2^nu) / (2^nu phi(2^{nu+2})),
/// which should be 2/3.
ExactRational two_adic_n_series();

/// Reassembly of the F-factor chain at each l | N:
///   F0 F4 = l/(l-1) K_l(N)   and   F0 F5 = l/(l-1) K_l(N) K^(l)(N,m) / l^{2 nu_l(m)}.
/// True iff every identity holds.
bool euler_chain_check(u64 N, u64 m, FormulaVariant v);

struct AssemblyCheck {
  GroupShape G;
  FormulaVariant variant = FormulaVariant::erratum;
  ExactRational lhs;  // sum_{k^2 | N2} mu(k) finite(K0_euler(N, k N1))
  ExactRational rhs;  // finite(K(G)) #G / #Aut(G)
  bool pass() const { return lhs == rhs; }
};
AssemblyCheck kG_assembly_check(const GroupShape& G, FormulaVariant v);

struct MpsReport {
  u64 x = 0;
  double partial_sum = 0.0;  // sum over odd 3 <= N <= x of K(N) N / (phi(N) log N)
  double comparator = 0.0;   // x / (3 log x)
  double ratio = 0.0;
};
MpsReport mps_average_report(u64 x, u64 L);

}  // namespace eccensus::constants
