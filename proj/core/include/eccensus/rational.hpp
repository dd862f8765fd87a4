#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include <gmpxx.h>

namespace eccensus {

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t num, std::int64_t den);
  explicit ExactRational(const mpq_class& q);
  explicit ExactRational(const mpz_class& z);

  /// Parses "n", "-n" or "n/d".
  static ExactRational parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  /// Always "num/den", e.g. "0/1", "-3/2".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  /// Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  ExactRational pow(unsigned e) const;

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

/// Pairwise (tree) summation; far cheaper than a running sum when the
/// denominators are many distinct integers.
ExactRational sum_exact(std::span<const ExactRational> terms);

}  // namespace eccensus
