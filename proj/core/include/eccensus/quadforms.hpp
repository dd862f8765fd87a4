#pragma once

// Class numbers of imaginary quadratic orders and the Kronecker class number
// H(D) = sum over f^2 | D with D/f^2 = 0,1 mod 4 of h(D/f^2) / w(D/f^2).
//
// Note on normalization: every term is divided by the unit count w, so H here
// is half of the common Hurwitz class number at generic discriminants. This
// matches weighting each curve by 1/#Aut(E).

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "eccensus/rational.hpp"

namespace eccensus::quadforms {

/// Negative discriminant, value = 0 or 1 mod 4 and value <= -3.
class Discriminant {
 public:
  /// Throws std::invalid_argument when the value is not a negative discriminant.
  explicit Discriminant(std::int64_t value);
  std::int64_t value() const { return value_; }
  std::uint64_t magnitude() const { return static_cast<std::uint64_t>(-value_); }
  static bool is_valid(std::int64_t value);

 private:
  std::int64_t value_;
};

struct ClassData {
  std::uint64_t h = 0;
  int w = 2;
  friend bool operator==(const ClassData&, const ClassData&) = default;
};

struct ReducedForm {
  std::int64_t a, b, c;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Primitive reduced forms (a, b, c) with b^2 - 4ac = d, |b| <= a <= c and
/// b >= 0 whenever |b| = a or a = c. Ordered by a, then b.
std::vector<ReducedForm> reduced_forms(Discriminant d);

ClassData class_data(Discriminant d);

/// Unit count of the order of discriminant d: 6 for -3, 4 for -4, else 2.
int unit_count(Discriminant d);

ExactRational kronecker_class_number(std::int64_t D);

/// Thread-safe memo of class data keyed by discriminant. Concurrent readers,
/// single writer per insertion; results do not depend on cache state.
class ClassNumberCache {
 public:
  ClassData get(std::int64_t d);
  ExactRational kronecker_class_number(std::int64_t D);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<std::int64_t, ClassData> table_;
};

/// Partial L-series sum_{n <= U} (d/n) / n in double precision.
double dirichlet_L1(Discriminant d, std::uint64_t U);

/// |2 pi h(d) / (w(d) sqrt|d|) - dirichlet_L1(d, U)|.
double class_number_formula_residual(Discriminant d, std::uint64_t U);

}  // namespace eccensus::quadforms
