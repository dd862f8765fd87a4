#include "eccensus/groups.hpp"

#include <stdexcept>
#include <vector>

#include "eccensus/arith.hpp"
#include "eccensus/constants.hpp"

namespace eccensus::constants {

using arith::u64;
using arith::i64;

ExactRational aut_ratio(const curves::GroupShape& G) {
  const u64 N = G.order();
  ExactRational r(static_cast<i64>(N), static_cast<i64>(arith::euler_phi(N) * G.n1 * G.n1));
  for (const auto& pp : arith::factorize(G.n1)) {
    const i64 l = static_cast<i64>(pp.prime);
    if (G.n2 % pp.prime != 0) {
      r *= ExactRational(l * l, l * l - 1);
    } else {
      r *= ExactRational(l, l - 1);
    }
  }
  return r;
}

u64 brute_aut_count(const curves::GroupShape& G) {
  const u64 n1 = G.n1;
  const u64 e = G.exponent();
  const u64 order = G.order();
  if (order > kBruteAutLimit) throw std::invalid_argument("brute_aut_count: group too large");
  // Element (u, v) of Z/n1 x Z/e is stored as u * e + v.
  auto scale = [&](u64 k, u64 u, u64 v) { return (k % n1 * u % n1) * e + (k % e * v % e); };

  std::vector<char> in_y(order);
  u64 count = 0;
  for (u64 yu = 0; yu < n1; ++yu) {
    for (u64 yv = 0; yv < e; ++yv) {
      // y must have order e: the multiple (e/q) y is nonzero for every prime q | e.
      bool full = true;
      for (const auto& pp : arith::factorize(e)) {
        if (scale(e / pp.prime, yu, yv) == 0) {
          full = false;
          break;
        }
      }
      if (!full) continue;
      std::fill(in_y.begin(), in_y.end(), 0);
      for (u64 j = 0; j < e; ++j) in_y[scale(j, yu, yv)] = 1;
      // x ranges over the n1-torsion {(u, v) : v a multiple of n2}; the map is
      // injective iff <x> meets <y> trivially and x has order n1.
      for (u64 xu = 0; xu < n1; ++xu) {
        for (u64 xv = 0; xv < e; xv += G.n2) {
          bool ok = true;
          for (u64 i = 1; i < n1 && ok; ++i) ok = !in_y[scale(i, xu, xv)];
          if (ok) ++count;
        }
      }
    }
  }
  return count;
}

Gl2Census gl2_census(u64 N_residue, u64 ell) {
  if (ell == 2 || ell > 31 || !arith::is_prime(ell)) {
    throw std::invalid_argument("gl2_census: ell must be an odd prime <= 31");
  }
  Gl2Census out;
  out.ell = ell;
  out.residue = N_residue % ell;
  for (u64 a = 0; a < ell; ++a) {
    for (u64 b = 0; b < ell; ++b) {
      for (u64 c = 0; c < ell; ++c) {
        for (u64 d = 0; d < ell; ++d) {
          const u64 det = (a * d + ell * ell - b * c % ell) % ell;
          if (det == 0) continue;
          ++out.group_order;
          if ((det + 1 + 2 * ell - a - d) % ell == out.residue) ++out.count;
        }
      }
    }
  }
  out.ratio = ExactRational(static_cast<i64>(out.count * ell), static_cast<i64>(out.group_order));
  if (out.in_scope()) out.expected = coprime_factor(ell, out.residue);
  return out;
}

}  // namespace eccensus::constants
