#pragma once

// Brute-force arithmetic on short Weierstrass curves y^2 = x^3 + ax + b over
// F_p, p > 3: point counts, group shapes Z/N1 x Z/N1N2, and automorphism-
// weighted model counts.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eccensus/arith.hpp"
#include "eccensus/rational.hpp"

namespace eccensus::curves {

using arith::u64;

struct PrimeFieldCurve {
  u64 p = 0;
  u64 a = 0;
  u64 b = 0;

  /// Reduces a, b mod p. Throws std::invalid_argument if p is not a prime > 3
  /// or 4a^3 + 27b^2 = 0 mod p.
  static PrimeFieldCurve make(u64 p, u64 a, u64 b);
  static bool is_nonsingular(u64 p, u64 a, u64 b);
};

/// G = Z/N1 x Z/N1N2. Order N1^2 N2, exponent N1 N2.
struct GroupShape {
  u64 n1 = 1;
  u64 n2 = 1;

  u64 order() const { return n1 * n1 * n2; }
  u64 exponent() const { return n1 * n2; }

  /// From the invariant factors Z/a x Z/b; requires a | b.
  static GroupShape from_factors(u64 a, u64 b);
  /// Parses "AxB" meaning Z/A x Z/B (A | B), or "N" for the cyclic group.
  static GroupShape parse(const std::string& text);
  /// "AxB" with A = N1, B = N1*N2.
  std::string str() const;

  friend auto operator<=>(const GroupShape&, const GroupShape&) = default;
};

struct CurvePoint {
  bool infinity = true;
  u64 x = 0;
  u64 y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(u64 x, u64 y) { return {false, x, y}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Group law on one curve. An optional inverse table (inverse[t] = t^{-1} mod
/// p, size p) avoids the extended Euclid per addition in census sweeps.
class CurveGroup {
 public:
  explicit CurveGroup(const PrimeFieldCurve& curve, std::span<const u64> inverse_table = {});

  const PrimeFieldCurve& curve() const { return c_; }
  bool on_curve(const CurvePoint& P) const;
  CurvePoint negate(const CurvePoint& P) const;
  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
  CurvePoint multiply(const CurvePoint& P, u64 k) const;

  /// Exact order of P given a known multiple of it (e.g. the group order).
  u64 order_dividing(const CurvePoint& P, u64 multiple, const arith::Factorization& multiple_factors) const;
  /// Order by repeated addition.
  u64 order_by_enumeration(const CurvePoint& P) const;
  /// Order via baby-step giant-step over the Hasse window, then reduction.
  u64 order_bsgs(const CurvePoint& P) const;

  /// All affine points in (x, then y) order, followed by none of infinity.
  std::vector<CurvePoint> affine_points() const;

 private:
  u64 inverse(u64 t) const;

  PrimeFieldCurve c_;
  std::span<const u64> inv_;
};

/// N = p + 1 + sum_x ((x^3 + ax + b) / p).
u64 curve_order(const PrimeFieldCurve& c);
/// Exhaustive point count (test oracle, O(p^2)).
u64 curve_order_exhaustive(const PrimeFieldCurve& c);

/// Largest d with d^2 | order and d | p - 1; the Weil pairing caps N1 by this.
u64 max_possible_n1(u64 p, u64 order);

/// Exponent as the lcm of point orders (points taken in (x, y) order; stops
/// once the exponent reaches the order). Point orders use enumeration for
/// p <= 400 and baby-step giant-step above.
GroupShape group_shape(const PrimeFieldCurve& c);

/// Per-prime census of all nonsingular (a, b): counts keyed by (order, N1).
struct ShapeHistogram {
  u64 p = 0;
  std::map<std::pair<u64, u64>, u64> counts;

  u64 total_models() const;
  /// #{(a, b) : shape = G}.
  u64 models_with_shape(const GroupShape& G) const;
  /// #{(a, b) : order = N and m | N1}.
  u64 models_with_torsion(u64 N, u64 m) const;
};

/// Exhaustive sweep over F_p^2. p must be a prime > 3.
ShapeHistogram sweep_prime(u64 p);

/// M_p(G): each isomorphism class has (p - 1)/#Aut(E) models, so the model
/// count divided by p - 1 is the automorphism-weighted class count.
ExactRational weighted_count_with_group(u64 p, const GroupShape& G);
ExactRational weighted_count_with_group(const ShapeHistogram& hist, const GroupShape& G);

/// M_p(N; m): order N with full rational m-torsion (m | N1). Requires m^2 | N.
ExactRational weighted_count_with_torsion(u64 p, u64 N, u64 m);
ExactRational weighted_count_with_torsion(const ShapeHistogram& hist, u64 N, u64 m);

}  // namespace eccensus::curves
