#include "eccensus/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace eccensus {

namespace {

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  const bool neg = v < 0;
  const auto mag = neg ? static_cast<unsigned long long>(-(v + 1)) + 1ULL
                       : static_cast<unsigned long long>(v);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) z = -z;
  return z;
}

}  // namespace

ExactRational::ExactRational(std::int64_t n) : v_(to_mpz(n)) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  v_ = mpq_class(to_mpz(num), to_mpz(den));
  v_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

ExactRational::ExactRational(const mpz_class& z) : v_(z) {}

ExactRational ExactRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  mpz_class num, den = 1;
  if (num.set_str(text.substr(0, slash), 10) != 0) {
    throw std::invalid_argument("ExactRational::parse: bad numerator in '" + text + "'");
  }
  if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0) {
    throw std::invalid_argument("ExactRational::parse: bad denominator in '" + text + "'");
  }
  if (den == 0) throw std::domain_error("ExactRational::parse: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ExactRational(q);
}

std::string ExactRational::str() const { return numerator_str() + "/" + denominator_str(); }

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  v_ += o.v_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  v_ -= o.v_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  v_ *= o.v_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
  v_ /= o.v_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-v_)); }

ExactRational ExactRational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return ExactRational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.str(); }

ExactRational sum_exact(std::span<const ExactRational> terms) {
  if (terms.empty()) return ExactRational{};
  std::vector<ExactRational> level(terms.begin(), terms.end());
  while (level.size() > 1) {
    std::vector<ExactRational> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

}  // namespace eccensus
