#include <numeric>
#include <random>

#include "doctest.h"
#include "eccensus/arith.hpp"
#include "eccensus/rational.hpp"
#include "eccensus/sieve.hpp"

using namespace eccensus;
using namespace eccensus::arith;

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(!is_prime(1));
  CHECK(!is_prime(561));
  CHECK(is_prime(1'000'000'007));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK(!is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7

  const auto f = factorize(2 * 2 * 3 * 1'000'003ULL * 1'000'003ULL);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == PrimePower{2, 2});
  CHECK(f[1] == PrimePower{3, 1});
  CHECK(f[2] == PrimePower{1'000'003, 2});
  CHECK(factorize(1).empty());

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 n = rng() % 10'000'000'000ULL + 1;
    const auto fac = factorize(n);
    CHECK(reconstruct(fac) == n);
    for (const auto& pp : fac) CHECK(is_prime(pp.prime));
  }
}

TEST_CASE("multiplicative functions against definitions") {
  for (u64 n = 1; n <= 300; ++n) {
    u64 phi = 0;
    for (u64 k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == phi);
    u64 dcount = 0;
    for (u64 k = 1; k <= n; ++k) dcount += n % k == 0;
    CHECK(divisors(n).size() == dcount);
    // sum_{d | n} mu(d) = [n = 1]
    int s = 0;
    for (u64 d : divisors(n)) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(valuation(72, 3).exponent == 2);
  CHECK(valuation(72, 3).free_part == 8);
  CHECK_THROWS_AS(valuation(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(valuation(10, 4), std::invalid_argument);
}

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 200, 1'000'000'007) == 136318165);
  CHECK(mulmod(invmod(17, 101), 17, 101) == 1);
  CHECK_THROWS_AS(invmod(6, 9), std::domain_error);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(~0ULL) == 4294967295ULL);
  CHECK(is_perfect_square(144));
  CHECK(!is_perfect_square(145));
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(lcm(4, 6) == 12);
  CHECK(ipow(3, 5) == 243);
}

TEST_CASE("kronecker symbol matches Euler's criterion and reciprocity") {
  for (u64 p : primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = -50; a <= 50; ++a) {
      const u64 r = mod_floor(a, p);
      const u64 e = powmod(r, (p - 1) / 2, p);
      const int expected = r == 0 ? 0 : (e == 1 ? 1 : -1);
      CHECK(kronecker(a, static_cast<i64>(p)) == expected);
    }
  }
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(1, 2) == 1);
  CHECK(kronecker(-3, -1) == -1);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(jacobi(2, 15) == 1);
  // Multiplicativity in the bottom argument.
  for (i64 a = -20; a <= 20; ++a) {
    for (i64 m = 1; m <= 30; ++m) {
      for (i64 n = 1; n <= 30; ++n) {
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
  }
}

TEST_CASE("square roots modulo prime powers") {
  for (u64 p : primes_up_to(60)) {
    for (u64 a = 0; a < p; ++a) {
      const auto r = sqrt_mod_prime(a, p);
      bool residue = false;
      for (u64 y = 0; y < p; ++y) residue |= mulmod(y, y, p) == a;
      CHECK(r.has_value() == residue);
      if (r) CHECK(mulmod(*r, *r, p) == a);
    }
    for (unsigned e = 1; ipow(p, e) <= 3000; ++e) {
      const u64 q = ipow(p, e);
      for (u64 k = 0; k < q; ++k) {
        u64 brute = 0;
        for (u64 y = 0; y < q; ++y) brute += mulmod(y, y, q) == k;
        CHECK(count_square_roots(k, p, e) == brute);
      }
    }
  }
}

TEST_CASE("sieve") {
  const auto small = primes_up_to(30);
  CHECK(small == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_in_interval(10, 29) == std::vector<u64>{11, 13, 17, 19, 23});
  CHECK(primes_up_to(1'000'000).size() == 78498);
  const u64 lo = 1'000'000'000'000ULL;
  for (u64 p : primes_in_interval(lo, lo + 1000)) CHECK(is_prime(p));
  u64 count = 0;
  for (u64 n = lo + 1; n < lo + 1000; ++n) count += is_prime(n);
  CHECK(primes_in_interval(lo, lo + 1000).size() == count);
}

TEST_CASE("exact rationals") {
  const ExactRational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(ExactRational::parse("10/4") == ExactRational(5, 2));
  CHECK(ExactRational::parse("-7").str() == "-7/1");
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("x"));
  CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
  CHECK(ExactRational(2, 3).pow(3) == ExactRational(8, 27));
  std::vector<ExactRational> terms;
  ExactRational running;
  for (int k = 1; k <= 200; ++k) {
    terms.emplace_back(1, k);
    running += ExactRational(1, k);
  }
  CHECK(sum_exact(terms) == running);
  CHECK(sum_exact({}) == ExactRational(0));
}
