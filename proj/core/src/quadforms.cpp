#include "eccensus/quadforms.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eccensus/arith.hpp"

namespace eccensus::quadforms {

using arith::i64;
using arith::u64;

bool Discriminant::is_valid(i64 value) {
  if (value > -3) return false;
  const u64 r = arith::mod_floor(value, 4);
  return r == 0 || r == 1;
}

Discriminant::Discriminant(i64 value) : value_(value) {
  if (!is_valid(value)) {
    throw std::invalid_argument("not a negative discriminant: " + std::to_string(value));
  }
}

std::vector<ReducedForm> reduced_forms(Discriminant d) {
  const i64 D = d.value();
  const u64 amax = arith::isqrt(d.magnitude() / 3);
  std::vector<ReducedForm> out;
  for (i64 a = 1; a <= static_cast<i64>(amax); ++a) {
    // b = D mod 2, |b| <= a.
    for (i64 b = -a; b <= a; ++b) {
      if (((b - D) & 1) != 0) continue;
      const i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

int unit_count(Discriminant d) {
  if (d.value() == -3) return 6;
  if (d.value() == -4) return 4;
  return 2;
}

ClassData class_data(Discriminant d) {
  return {static_cast<u64>(reduced_forms(d).size()), unit_count(d)};
}

ExactRational kronecker_class_number(i64 D) {
  ClassNumberCache local;
  return local.kronecker_class_number(D);
}

ClassData ClassNumberCache::get(i64 d) {
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(d); it != table_.end()) return it->second;
  }
  const ClassData cd = class_data(Discriminant(d));
  std::unique_lock lock(mu_);
  table_.emplace(d, cd);
  return cd;
}

ExactRational ClassNumberCache::kronecker_class_number(i64 D) {
  const Discriminant disc(D);
  ExactRational total;
  const u64 mag = disc.magnitude();
  for (u64 f = 1; f * f <= mag; ++f) {
    if (mag % (f * f) != 0) continue;
    const i64 reduced = D / static_cast<i64>(f * f);
    if (!Discriminant::is_valid(reduced)) continue;
    const ClassData cd = get(reduced);
    total += ExactRational(static_cast<i64>(cd.h), cd.w);
  }
  return total;
}

std::size_t ClassNumberCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

double dirichlet_L1(Discriminant d, u64 U) {
  // (d/.) is periodic modulo |d| for a discriminant d.
  const u64 q = d.magnitude();
  std::vector<double> chi(q);
  for (u64 r = 0; r < q; ++r) chi[r] = arith::kronecker(d.value(), static_cast<i64>(r));
  double sum = 0.0;
  u64 n = 1;
  while (n <= U) {
    const u64 block_end = std::min(U, n + q - 1 - (n % q));
    double block = 0.0;
    for (u64 k = n, r = n % q; k <= block_end; ++k, ++r) block += chi[r] / static_cast<double>(k);
    sum += block;
    n = block_end + 1;
  }
  return sum;
}

double class_number_formula_residual(Discriminant d, u64 U) {
  const ClassData cd = class_data(d);
  const double lhs = 2.0 * std::numbers::pi * static_cast<double>(cd.h) /
                     (cd.w * std::sqrt(static_cast<double>(d.magnitude())));
  return std::abs(lhs - dirichlet_L1(d, U));
}

}  // namespace eccensus::quadforms
