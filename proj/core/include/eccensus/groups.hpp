#pragma once

// Automorphism counts of G = Z/N1 x Z/N1N2 and the GL2(F_l) trace census.

#include <cstdint>

#include "eccensus/curves.hpp"
#include "eccensus/rational.hpp"

namespace eccensus::constants {

/// #G / #Aut(G) = N / (phi(N) N1^2) prod_{l | N1, l !| N2} l^2/(l^2 - 1)
///                                 prod_{l | (N1, N2)} l/(l - 1).
ExactRational aut_ratio(const curves::GroupShape& G);

/// Largest group order accepted by brute_aut_count.
inline constexpr std::uint64_t kBruteAutLimit = 10'000;

/// #Aut(G) by counting images (x, y) of the generators of Z/N1 and Z/N1N2
/// with N1 x = 0 for which (i, j) -> i x + j y is injective.
std::uint64_t brute_aut_count(const curves::GroupShape& G);

struct Gl2Census {
  std::uint64_t ell = 0;
  std::uint64_t residue = 0;    // N mod l
  std::uint64_t count = 0;      // #{g : det g + 1 - tr g = N mod l}
  std::uint64_t group_order = 0;
  ExactRational ratio;          // count * l / #GL2
  ExactRational expected;       // coprime factor of K(N) at l (only if l !| N)
  bool in_scope() const { return residue != 0; }
  bool pass() const { return !in_scope() || ratio == expected; }
};

/// Brute force over GL2(Z/l). l must be an odd prime <= 31.
Gl2Census gl2_census(std::uint64_t N_residue, std::uint64_t ell);

}  // namespace eccensus::constants
