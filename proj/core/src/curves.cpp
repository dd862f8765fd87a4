#include "eccensus/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace eccensus::curves {

using arith::i64;
using arith::mulmod;

namespace {

u64 addmod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 rhs(const PrimeFieldCurve& c, u64 x) {
  const u64 x2 = mulmod(x, x, c.p);
  return addmod(addmod(mulmod(x2, x, c.p), mulmod(c.a, x, c.p), c.p), c.b, c.p);
}

void require_prime_above_3(u64 p) {
  if (p <= 3 || !arith::is_prime(p)) {
    throw std::invalid_argument("curves: p must be a prime > 3, got " + std::to_string(p));
  }
}

struct PrimeTables {
  std::vector<signed char> chi2;  // Legendre symbol of t mod p, for t < 2p
  std::vector<i64> root;          // some square root of t, or -1
  std::vector<u64> inverse;       // t^{-1} mod p, inverse[0] = 0
};

PrimeTables build_tables(u64 p) {
  PrimeTables t;
  t.chi2.assign(2 * p, -1);
  t.root.assign(p, -1);
  t.inverse.assign(p, 0);
  t.chi2[0] = t.chi2[p] = 0;
  t.root[0] = 0;
  for (u64 y = 1; y <= p / 2; ++y) {
    const u64 s = y * y % p;
    t.chi2[s] = t.chi2[s + p] = 1;
    t.root[s] = static_cast<i64>(y);
  }
  for (u64 x = 1; x < p; ++x) {
    if (t.inverse[x] == 0) {
      const u64 ix = arith::invmod(x, p);
      t.inverse[x] = ix;
      t.inverse[ix] = x;
    }
  }
  return t;
}

}  // namespace

bool PrimeFieldCurve::is_nonsingular(u64 p, u64 a, u64 b) {
  a %= p;
  b %= p;
  const u64 a3 = mulmod(mulmod(a, a, p), a, p);
  const u64 b2 = mulmod(b, b, p);
  return addmod(mulmod(4 % p, a3, p), mulmod(27 % p, b2, p), p) != 0;
}

PrimeFieldCurve PrimeFieldCurve::make(u64 p, u64 a, u64 b) {
  require_prime_above_3(p);
  if (!is_nonsingular(p, a, b)) throw std::invalid_argument("curves: singular curve (4a^3 + 27b^2 = 0)");
  return {p, a % p, b % p};
}

GroupShape GroupShape::from_factors(u64 a, u64 b) {
  if (a == 0 || b == 0 || b % a != 0) {
    throw std::invalid_argument("GroupShape: need Z/A x Z/B with A | B");
  }
  return {a, b / a};
}

GroupShape GroupShape::parse(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) return from_factors(1, std::stoull(text));
    return from_factors(std::stoull(text.substr(0, x)), std::stoull(text.substr(x + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("GroupShape: cannot parse '" + text + "' (expected AxB with A | B)");
  }
}

std::string GroupShape::str() const { return std::to_string(n1) + "x" + std::to_string(n1 * n2); }

CurveGroup::CurveGroup(const PrimeFieldCurve& curve, std::span<const u64> inverse_table)
    : c_(curve), inv_(inverse_table) {}

u64 CurveGroup::inverse(u64 t) const { return inv_.empty() ? arith::invmod(t, c_.p) : inv_[t]; }

bool CurveGroup::on_curve(const CurvePoint& P) const {
  if (P.infinity) return true;
  if (P.x >= c_.p || P.y >= c_.p) return false;
  return mulmod(P.y, P.y, c_.p) == rhs(c_, P.x);
}

CurvePoint CurveGroup::negate(const CurvePoint& P) const {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, P.y == 0 ? 0 : c_.p - P.y);
}

CurvePoint CurveGroup::add(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const u64 p = c_.p;
  u64 lambda;
  if (P.x == Q.x) {
    if (addmod(P.y, Q.y, p) == 0) return CurvePoint::at_infinity();
    const u64 num = addmod(mulmod(3, mulmod(P.x, P.x, p), p), c_.a, p);
    lambda = mulmod(num, inverse(addmod(P.y, P.y, p)), p);
  } else {
    lambda = mulmod(submod(Q.y, P.y, p), inverse(submod(Q.x, P.x, p)), p);
  }
  const u64 x3 = submod(submod(mulmod(lambda, lambda, p), P.x, p), Q.x, p);
  const u64 y3 = submod(mulmod(lambda, submod(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

CurvePoint CurveGroup::multiply(const CurvePoint& P, u64 k) const {
  CurvePoint result = CurvePoint::at_infinity();
  CurvePoint base = P;
  while (k > 0) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

u64 CurveGroup::order_dividing(const CurvePoint& P, u64 multiple, const arith::Factorization& factors) const {
  u64 order = multiple;
  for (const auto& pp : factors) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      if (!multiply(P, order / pp.prime).infinity) break;
      order /= pp.prime;
    }
  }
  return order;
}

u64 CurveGroup::order_by_enumeration(const CurvePoint& P) const {
  u64 k = 1;
  for (CurvePoint Q = P; !Q.infinity; Q = add(Q, P)) ++k;
  return k;
}

u64 CurveGroup::order_bsgs(const CurvePoint& P) const {
  if (P.infinity) return 1;
  const u64 p = c_.p;
  const u64 two_root = arith::isqrt(4 * p);  // floor(2 sqrt p)
  const u64 lo = p + 1 - two_root;
  const u64 width = 2 * two_root + 1;
  const u64 steps = arith::isqrt(width) + 1;

  struct Key {
    std::size_t operator()(const CurvePoint& q) const {
      return std::hash<u64>{}(q.x * 0x9E3779B97F4A7C15ULL ^ q.y ^ (q.infinity ? 1 : 0));
    }
  };
  std::unordered_map<CurvePoint, u64, Key> baby;
  CurvePoint jp = CurvePoint::at_infinity();
  for (u64 j = 0; j < steps; ++j) {
    baby.try_emplace(jp, j);
    jp = add(jp, P);
  }
  // Find the least k in [0, width) with (lo + k) P = O, i.e. kP = -lo P.
  const CurvePoint giant_step = negate(multiply(P, steps));
  CurvePoint target = negate(multiply(P, lo));
  u64 multiple = 0;
  for (u64 i = 0; i * steps < width + steps; ++i) {
    if (auto it = baby.find(target); it != baby.end()) {
      multiple = lo + i * steps + it->second;
      break;
    }
    target = add(target, giant_step);
  }
  if (multiple == 0) throw std::logic_error("order_bsgs: no multiple of the point order in the Hasse window");
  return order_dividing(P, multiple, arith::factorize(multiple));
}

std::vector<CurvePoint> CurveGroup::affine_points() const {
  std::vector<CurvePoint> out;
  const u64 p = c_.p;
  for (u64 x = 0; x < p; ++x) {
    const u64 r = rhs(c_, x);
    if (r == 0) {
      out.push_back(CurvePoint::affine(x, 0));
      continue;
    }
    const auto y = arith::sqrt_mod_prime(r, p);
    if (!y) continue;
    const u64 y_lo = std::min(*y, p - *y);
    out.push_back(CurvePoint::affine(x, y_lo));
    out.push_back(CurvePoint::affine(x, p - y_lo));
  }
  return out;
}

u64 curve_order(const PrimeFieldCurve& c) {
  i64 s = 0;
  for (u64 x = 0; x < c.p; ++x) s += arith::jacobi(rhs(c, x), c.p);
  return static_cast<u64>(static_cast<i64>(c.p) + 1 + s);
}

u64 curve_order_exhaustive(const PrimeFieldCurve& c) {
  u64 count = 1;
  for (u64 x = 0; x < c.p; ++x) {
    const u64 r = rhs(c, x);
    for (u64 y = 0; y < c.p; ++y) {
      if (mulmod(y, y, c.p) == r) ++count;
    }
  }
  return count;
}

u64 max_possible_n1(u64 p, u64 order) {
  const u64 g = std::gcd(p - 1, order);
  u64 best = 1;
  for (const auto& pp : arith::factorize(g)) {
    unsigned e = 0;
    u64 n = order;
    while (n % (pp.prime * pp.prime) == 0 && e < pp.exponent) {
      n /= pp.prime * pp.prime;
      ++e;
    }
    best *= arith::ipow(pp.prime, e);
  }
  return best;
}

GroupShape group_shape(const PrimeFieldCurve& c) {
  const u64 N = curve_order(c);
  if (max_possible_n1(c.p, N) == 1) return {1, N};
  const CurveGroup group(c);
  u64 exponent = 1;
  for (const auto& P : group.affine_points()) {
    const u64 ord = c.p <= 400 ? group.order_by_enumeration(P) : group.order_bsgs(P);
    exponent = arith::lcm(exponent, ord);
    if (exponent == N) break;
  }
  const u64 n1 = N / exponent;
  return {n1, exponent / n1};
}

u64 ShapeHistogram::total_models() const {
  u64 total = 0;
  for (const auto& [key, count] : counts) total += count;
  return total;
}

u64 ShapeHistogram::models_with_shape(const GroupShape& G) const {
  const auto it = counts.find({G.order(), G.n1});
  return it == counts.end() ? 0 : it->second;
}

u64 ShapeHistogram::models_with_torsion(u64 N, u64 m) const {
  u64 total = 0;
  for (auto it = counts.lower_bound({N, 0}); it != counts.end() && it->first.first == N; ++it) {
    if (it->first.second % m == 0) total += it->second;
  }
  return total;
}

ShapeHistogram sweep_prime(u64 p) {
  require_prime_above_3(p);
  const PrimeTables t = build_tables(p);
  ShapeHistogram hist;
  hist.p = p;

  const u64 two_root = arith::isqrt(4 * p);
  const u64 lo = p + 1 - two_root;
  std::vector<u64> n1_cap(2 * two_root + 1);
  std::vector<arith::Factorization> factors(n1_cap.size());
  for (std::size_t i = 0; i < n1_cap.size(); ++i) {
    n1_cap[i] = max_possible_n1(p, lo + i);
    factors[i] = arith::factorize(lo + i);
  }

  std::vector<u64> v(p);
  for (u64 a = 0; a < p; ++a) {
    for (u64 x = 0; x < p; ++x) v[x] = (x * x % p * x + a * x) % p;
    for (u64 b = 0; b < p; ++b) {
      if (!PrimeFieldCurve::is_nonsingular(p, a, b)) continue;
      i64 s = 0;
      for (u64 x = 0; x < p; ++x) s += t.chi2[v[x] + b];
      const u64 N = static_cast<u64>(static_cast<i64>(p) + 1 + s);
      const std::size_t slot = N - lo;
      u64 n1 = 1;
      if (n1_cap[slot] > 1) {
        const PrimeFieldCurve c{p, a, b};
        const CurveGroup group(c, t.inverse);
        u64 exponent = 1;
        for (u64 x = 0; x < p && exponent != N; ++x) {
          const u64 r = v[x] + b >= p ? v[x] + b - p : v[x] + b;
          if (t.root[r] < 0) continue;
          const u64 y = static_cast<u64>(t.root[r]);
          exponent = arith::lcm(exponent, group.order_dividing(CurvePoint::affine(x, y), N, factors[slot]));
          if (y != 0 && exponent != N) {
            exponent = arith::lcm(exponent, group.order_dividing(CurvePoint::affine(x, p - y), N, factors[slot]));
          }
        }
        n1 = N / exponent;
      }
      ++hist.counts[{N, n1}];
    }
  }
  return hist;
}

ExactRational weighted_count_with_group(const ShapeHistogram& hist, const GroupShape& G) {
  return ExactRational(static_cast<i64>(hist.models_with_shape(G)), static_cast<i64>(hist.p - 1));
}

ExactRational weighted_count_with_group(u64 p, const GroupShape& G) {
  return weighted_count_with_group(sweep_prime(p), G);
}

ExactRational weighted_count_with_torsion(const ShapeHistogram& hist, u64 N, u64 m) {
  if (m == 0 || N % (m * m) != 0) throw std::invalid_argument("weighted_count_with_torsion: need m^2 | N");
  return ExactRational(static_cast<i64>(hist.models_with_torsion(N, m)), static_cast<i64>(hist.p - 1));
}

ExactRational weighted_count_with_torsion(u64 p, u64 N, u64 m) {
  if (m == 0 || N % (m * m) != 0) throw std::invalid_argument("weighted_count_with_torsion: need m^2 | N");
  return weighted_count_with_torsion(sweep_prime(p), N, m);
}

}  // namespace eccensus::curves
