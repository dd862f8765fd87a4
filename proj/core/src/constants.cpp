#include "eccensus/constants.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "eccensus/arith.hpp"
#include "eccensus/groups.hpp"
#include "eccensus/sieve.hpp"

namespace eccensus::constants {

namespace {

ExactRational power(u64 ell, unsigned k) { return ExactRational(static_cast<i64>(ell)).pow(k); }

ExactRational frac(i64 num, i64 den) { return ExactRational(num, den); }

int legendre(i64 a, u64 ell) { return arith::kronecker(a, static_cast<i64>(ell)); }

unsigned nu(u64 n, u64 ell) { return n == 0 ? 0 : arith::valuation(n, ell).exponent; }

void require_odd_prime(u64 ell, const char* who) {
  if (ell == 2 || !arith::is_prime(ell)) throw std::invalid_argument(std::string(who) + ": ell must be an odd prime");
}

void require_square_divides(u64 N, u64 m, const char* who) {
  if (N == 0 || m == 0 || N % 2 == 0 || m % 2 == 0) {
    throw std::invalid_argument(std::string(who) + ": N and m must be odd and positive");
  }
  if (N % (m * m) != 0) throw std::invalid_argument(std::string(who) + ": need m^2 | N");
}

// (ell^{nu+1} - ell^{2mu}) / (ell^{nu+1} - ell^nu - 1)
ExactRational k_local_odd_form(u64 ell, unsigned v, unsigned mu) {
  return (power(ell, v + 1) - power(ell, 2 * mu)) / (power(ell, v + 1) - power(ell, v) - ExactRational(1));
}

ExactRational k_local(u64 ell, u64 N, u64 m, FormulaVariant variant) {
  const auto vN = arith::valuation(N, ell);
  const unsigned mu = nu(m, ell);
  if (variant == FormulaVariant::erratum || vN.exponent % 2 == 1) return k_local_odd_form(ell, vN.exponent, mu);
  const i64 chi = legendre(-static_cast<i64>(vN.free_part), ell);
  const unsigned v = vN.exponent;
  const ExactRational num = power(ell, v + 2) - power(ell, 2 * mu + 1) + ExactRational(chi) * power(ell, 2 * mu);
  const ExactRational den = power(ell, v + 2) - power(ell, v + 1) - ExactRational(static_cast<i64>(ell)) + ExactRational(chi);
  return num / den;
}

ExactRational F0(u64 ell) {
  const i64 l = static_cast<i64>(ell);
  return ExactRational(1) + frac(l - 2, (l - 1) * (l - 1));
}

ExactRational F1(u64 ell, u64 N) {
  const i64 l = static_cast<i64>(ell);
  const i64 c1 = legendre(static_cast<i64>(N) - 1, ell);
  const i64 num = c1 * c1 * l + legendre(static_cast<i64>(N), ell) + c1 * c1 + 1;
  return ExactRational(1) - frac(num, (l - 1) * (l * l - 1));
}

ExactRational F2(u64 ell, u64 N, u64 f, FormulaVariant variant) {
  const i64 l = static_cast<i64>(ell);
  const auto vN = arith::valuation(N, ell);
  const unsigned vf = nu(f, ell);
  if (vN.exponent < 2 * vf) return ExactRational(1) + frac(1, l * (l + 1));
  if (vN.exponent > 2 * vf) return ExactRational(1) + frac(1, l);
  const i64 free = static_cast<i64>(vN.free_part);
  const i64 chi_plus = legendre(free, ell);
  if (variant == FormulaVariant::erratum) return ExactRational(1) - frac(chi_plus + 1, l * (l * l - 1));
  const i64 chi_minus = legendre(-free, ell);
  return ExactRational(1) + frac(chi_minus * l + chi_minus - chi_plus - 1, l * (l * l - 1));
}

ExactRational F3(u64 ell, u64 N) {
  const i64 l = static_cast<i64>(ell);
  const u64 r = static_cast<u64>(static_cast<arith::u128>(N % ell) * ((N - 1) % ell) % ell * ((N - 1) % ell) % ell);
  const i64 num = 1 + legendre(static_cast<i64>(r), ell);
  return ExactRational(1) + ExactRational(num) / (F1(ell, N) * ExactRational((l + 1) * (l - 1) * (l - 1)));
}

ExactRational F4(u64 ell, u64 N, FormulaVariant variant) {
  const auto vN = arith::valuation(N, ell);
  const unsigned v = vN.exponent;
  const i64 l = static_cast<i64>(ell);
  ExactRational num = power(ell, v) - ExactRational(l);
  if (variant == FormulaVariant::original && v % 2 == 0) num += ExactRational(legendre(-static_cast<i64>(vN.free_part), ell));
  return ExactRational(1) + num / (F0(ell) * power(ell, v) * ExactRational((l - 1) * (l - 1)));
}

ExactRational F5(u64 ell, u64 N, u64 m, FormulaVariant variant) {
  const auto vN = arith::valuation(N, ell);
  const unsigned v = vN.exponent;
  const unsigned mu = nu(m, ell);
  const i64 l = static_cast<i64>(ell);
  const ExactRational sq(static_cast<i64>((l - 1) * (l - 1)));
  if (variant == FormulaVariant::erratum) {
    return (power(ell, v + 1) - power(ell, 2 * mu)) / (F0(ell) * power(ell, v + 2 * mu - 1) * sq);
  }
  const ExactRational lead = ExactRational(1) / (F0(ell) * power(ell, 2 * mu));
  if (v % 2 == 1) return lead * ExactRational(l) * (power(ell, v) - power(ell, 2 * mu)) / (power(ell, v) * sq);
  const i64 chi = legendre(-static_cast<i64>(vN.free_part), ell);
  return lead * (power(ell, v + 2) - power(ell, 2 * mu + 1) + ExactRational(chi) * power(ell, 2 * mu)) /
         (power(ell, v) * sq);
}

ExactRational F6(u64 ell, u64 N, FormulaVariant variant) {
  const i64 l = static_cast<i64>(ell);
  if (variant == FormulaVariant::erratum) return ExactRational(1) - frac(1, l * l);
  const i64 chi = legendre(-static_cast<i64>(arith::valuation(N, ell).free_part), ell);
  return ExactRational(1) + frac((chi - 1) * l + chi, l * l * l);
}

const std::vector<u64>& primes_cached(u64 L) {
  thread_local u64 cached_L = 0;
  thread_local std::vector<u64> cached;
  if (cached_L != L) {
    cached = arith::primes_up_to(L);
    cached_L = L;
  }
  return cached;
}

}  // namespace

void TruncationParams::validate() const {
  if (U < 1 || V < 1) throw std::invalid_argument("truncation: U and V must be positive");
  if (L < 3) throw std::invalid_argument("truncation: prime cutoff L must be at least 3");
}

std::string to_string(FactorKind k) {
  static const char* names[] = {"F0", "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "Klocal"};
  return names[static_cast<int>(k)];
}

FactorKind parse_factor_kind(const std::string& text) {
  for (int i = 0; i <= static_cast<int>(FactorKind::Klocal); ++i) {
    if (to_string(static_cast<FactorKind>(i)) == text) return static_cast<FactorKind>(i);
  }
  throw std::invalid_argument("unknown factor kind '" + text + "'");
}

ExactRational f_factor(FactorKind kind, u64 ell, u64 N, u64 aux, FormulaVariant v) {
  require_odd_prime(ell, "f_factor");
  if (N == 0 || N % 2 == 0) throw std::invalid_argument("f_factor: N must be odd");
  const bool l_divides_N = N % ell == 0;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument("f_factor " + to_string(kind) + ": requires " + what);
  };
  switch (kind) {
    case FactorKind::F0:
      return F0(ell);
    case FactorKind::F1:
      need(!l_divides_N, "l not dividing N");
      return F1(ell, N);
    case FactorKind::F2:
      need(aux % 2 == 1 && aux % ell == 0, "odd f divisible by l");
      return F2(ell, N, aux, v);
    case FactorKind::F3:
      need(!l_divides_N, "l not dividing N");
      return F3(ell, N);
    case FactorKind::F4:
      need(l_divides_N, "l | N");
      return F4(ell, N, v);
    case FactorKind::F5:
      require_square_divides(N, aux, "f_factor F5");
      need(aux % ell == 0, "l | m");
      return F5(ell, N, aux, v);
    case FactorKind::F6:
      need(l_divides_N, "l | N");
      return F6(ell, N, v);
    case FactorKind::F7:
      return ExactRational(1) - frac(1, static_cast<i64>(ell * ell));
    case FactorKind::F8:
      return ExactRational(1) - frac(1, static_cast<i64>(ell * (ell - 1)));
    case FactorKind::Klocal:
      require_square_divides(N, aux, "f_factor Klocal");
      need(aux % ell == 0, "l | m");
      return k_local(ell, N, aux, v);
  }
  throw std::logic_error("f_factor: unreachable");
}

ExactRational coprime_factor(u64 ell, u64 N) {
  if (!arith::is_prime(ell)) throw std::invalid_argument("coprime_factor: ell must be prime");
  if (N % ell == 0) throw std::invalid_argument("coprime_factor: ell must not divide N");
  const i64 l = static_cast<i64>(ell);
  const i64 c1 = arith::kronecker(static_cast<i64>(N) - 1, l);
  return ExactRational(1) - frac(c1 * c1 * l + 1, (l + 1) * (l - 1) * (l - 1));
}

ExactRational K_of_N_local(u64 ell, u64 N, FormulaVariant variant) {
  require_odd_prime(ell, "K_of_N_local");
  const auto vN = arith::valuation(N, ell);
  if (vN.exponent == 0) throw std::invalid_argument("K_of_N_local: ell must divide N");
  const i64 l = static_cast<i64>(ell);
  if (variant == FormulaVariant::erratum || vN.exponent % 2 == 1) {
    return ExactRational(1) - ExactRational(1) / (power(ell, vN.exponent) * ExactRational(l - 1));
  }
  const i64 chi = legendre(-static_cast<i64>(vN.free_part), ell);
  return ExactRational(1) - ExactRational(l - chi) / (power(ell, vN.exponent + 1) * ExactRational(l - 1));
}

EulerValue coprime_product(u64 N, u64 L) {
  if (L < 3) throw std::invalid_argument("coprime_product: L must be at least 3");
  EulerValue out;
  out.finite = ExactRational(1);
  for (u64 ell : primes_cached(L)) {
    if (N % ell == 0) continue;
    const double l = static_cast<double>(ell);
    const double c1 = (N - 1) % ell == 0 ? 0.0 : 1.0;
    out.tail *= 1.0 - (c1 * l + 1.0) / ((l + 1.0) * (l - 1.0) * (l - 1.0));
  }
  out.tail_bound = 1.0 / static_cast<double>(L - 1);
  return out;
}

EulerValue K_of_N(u64 N, FormulaVariant v, u64 L) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("K_of_N: N must be odd and at least 3");
  EulerValue out = coprime_product(N, L);
  for (const auto& pp : arith::factorize(N)) out.finite *= K_of_N_local(pp.prime, N, v);
  return out;
}

ExactRational K_of_N_m(u64 N, u64 m, FormulaVariant v) {
  require_square_divides(N, m, "K_of_N_m");
  ExactRational out(1);
  for (const auto& pp : arith::factorize(m)) out *= k_local(pp.prime, N, m, v);
  return out;
}

EulerValue K_of_G(const GroupShape& G, FormulaVariant v, u64 L) {
  const u64 N = G.order();
  if (N % 2 == 0) throw std::invalid_argument("K_of_G: #G must be odd");
  EulerValue out = coprime_product(N, L);
  if (v == FormulaVariant::erratum) {
    for (const auto& pp : arith::factorize(G.n1)) {
      const i64 l = static_cast<i64>(pp.prime);
      out.finite *= ExactRational(1) - frac(1, l * l);
    }
    for (const auto& pp : arith::factorize(G.n2)) {
      if (G.n1 % pp.prime == 0) continue;
      const i64 l = static_cast<i64>(pp.prime);
      out.finite *= ExactRational(1) - frac(1, l * (l - 1));
    }
    return out;
  }
  for (const auto& pp : arith::factorize(N)) {
    const i64 l = static_cast<i64>(pp.prime);
    out.finite *= ExactRational(1) - frac(1, l * (l - 1));
  }
  for (const auto& pp : arith::factorize(G.n1)) {
    const i64 l = static_cast<i64>(pp.prime);
    out.finite *= ExactRational(1) + frac(1, l * (l * l - l - 1));
    if (G.n2 % pp.prime != 0) {
      out.finite *= ExactRational(1) + frac(arith::kronecker(-static_cast<i64>(G.n2), l), l * (l - 1));
    }
  }
  return out;
}

EulerValue K0_euler(u64 N, u64 m, FormulaVariant v, u64 L) {
  require_square_divides(N, m, "K0_euler");
  if (N < 3) throw std::invalid_argument("K0_euler: N must be at least 3");
  EulerValue out = K_of_N(N, v, L);
  out.finite *= ExactRational(static_cast<i64>(N), static_cast<i64>(arith::euler_phi(N) * m * m));
  out.finite *= K_of_N_m(N, m, v);
  return out;
}

// ---------------------------------------------------------------------------
// Truncated series

namespace {

// Memoized local pieces of the inner a-sum for a fixed N. Each depends on f
// only through nu_l(f): substituting a -> a f'^2 (f' the l-free part of f)
// permutes the units and preserves the character.
class InnerSumTables {
 public:
  explicit InnerSumTables(u64 N) : N_(N) {}

  // sum over a mod 2^{nu+2}, a = 1 mod 4, of (a/2)^nu #C^(2)(a, 2^nu, f)
  i64 two_adic(unsigned nu2) {
    if (auto it = two_.find(nu2); it != two_.end()) return it->second;
    const u64 q = u64{1} << (nu2 + 2);
    std::vector<u64> hist(q, 0);
    const u64 shift = (N_ + 1) % q;
    const u64 four_n = 4 * N_ % q;
    for (u64 b = 1; b < q; b += 2) {
      const u64 y = (b + q - shift) % q;
      ++hist[(y * y % q + q - four_n) % q];
    }
    i64 total = 0;
    for (u64 a = 1; a < q; a += 4) {
      int chi = 1;
      if (nu2 % 2 == 1) chi = (a % 8 == 1 || a % 8 == 7) ? 1 : -1;
      // Keyed by a rather than a f^2: f^2 = 1 mod 8, so a -> a f^2 permutes
      // the a = 1 mod 4 classes without changing (a/2).
      total += chi * static_cast<i64>(hist[a]);
    }
    two_.emplace(nu2, total);
    return total;
  }

  // sum over a in (Z/l^alpha)^* of (a/l)^alpha #C^(l)(a, l^alpha, l^{nu_f})
  i64 odd_local(u64 ell, unsigned alpha, unsigned nu_f) {
    const auto key = std::make_tuple(ell, alpha, nu_f);
    if (auto it = odd_.find(key); it != odd_.end()) return it->second;
    const u64 q = arith::ipow(ell, alpha);
    const u64 f = arith::ipow(ell, nu_f);
    i64 total = 0;
    for (u64 a = 1; a < q; ++a) {
      if (a % ell == 0) continue;
      int chi = 1;
      if (alpha % 2 == 1) chi = legendre(static_cast<i64>(a % ell), ell);
      total += chi * static_cast<i64>(local_C_count(N_, a, q, f, ell));
    }
    odd_.emplace(key, total);
    return total;
  }

  // #C^(l)(1, 1, l^{nu_f})
  i64 unramified_f(u64 ell, unsigned nu_f) {
    const auto key = std::make_pair(ell, nu_f);
    if (auto it = plain_.find(key); it != plain_.end()) return it->second;
    const i64 c = static_cast<i64>(local_C_count(N_, 1, 1, arith::ipow(ell, nu_f), ell));
    plain_.emplace(key, c);
    return c;
  }

 private:
  u64 N_;
  std::map<unsigned, i64> two_;
  std::map<std::tuple<u64, unsigned, unsigned>, i64> odd_;
  std::map<std::pair<u64, unsigned>, i64> plain_;
};

i64 inner_sum(InnerSumTables& tables, const arith::Factorization& n_fac, const arith::Factorization& f_fac) {
  unsigned nu2 = 0;
  i64 total = 1;
  for (const auto& pp : n_fac) {
    if (pp.prime == 2) {
      nu2 = pp.exponent;
      continue;
    }
    unsigned nu_f = 0;
    for (const auto& fp : f_fac) {
      if (fp.prime == pp.prime) nu_f = fp.exponent;
    }
    total *= tables.odd_local(pp.prime, pp.exponent, nu_f);
    if (total == 0) return 0;
  }
  for (const auto& fp : f_fac) {
    bool divides_n = false;
    for (const auto& pp : n_fac) divides_n |= pp.prime == fp.prime;
    if (!divides_n) total *= tables.unramified_f(fp.prime, fp.exponent);
    if (total == 0) return 0;
  }
  return total * tables.two_adic(nu2);
}

arith::Factorization merge(const arith::Factorization& a, const arith::Factorization& b, unsigned b_mult) {
  std::map<u64, unsigned> m;
  for (const auto& pp : a) m[pp.prime] += pp.exponent;
  for (const auto& pp : b) m[pp.prime] += pp.exponent * b_mult;
  arith::Factorization out;
  for (const auto& [p, e] : m) out.push_back({p, e});
  return out;
}

}  // namespace

i64 K0_inner_sum(u64 N, u64 n, u64 f) {
  if (N % 2 == 0 || f % 2 == 0 || n == 0) throw std::invalid_argument("K0_inner_sum: need N, f odd and n >= 1");
  InnerSumTables tables(N);
  return inner_sum(tables, arith::factorize(n), arith::factorize(f));
}

i64 K0_inner_sum_literal(u64 N, u64 n, u64 f) {
  i64 total = 0;
  for (u64 a = 1; a <= 4 * n; a += 4) {
    const int chi = arith::kronecker(static_cast<i64>(a), static_cast<i64>(n));
    if (chi != 0) total += chi * static_cast<i64>(big_C_count(N, a, n, f));
  }
  return total;
}

ExactRational K0_truncated(u64 N, u64 m, const TruncationParams& t) {
  t.validate();
  require_square_divides(N, m, "K0_truncated");
  InnerSumTables tables(N);
  std::vector<arith::Factorization> n_fac(t.U + 1);
  for (u64 n = 1; n <= t.U; ++n) n_fac[n] = arith::factorize(n);
  std::vector<ExactRational> per_f;
  for (u64 g = 1; g <= t.V; ++g) {
    const u64 f = m * g;
    if (f % 2 == 0) continue;
    const auto f_fac = arith::factorize(f);
    std::vector<ExactRational> terms;
    for (u64 n = 1; n <= t.U; ++n) {
      const i64 A = inner_sum(tables, n_fac[n], f_fac);
      if (A == 0) continue;
      // phi(4 n f^2) from the merged factorization of 4n and f^2.
      const auto full = merge(merge(n_fac[n], {{2, 2}}, 1), f_fac, 2);
      const u64 phi = arith::euler_phi(full);
      terms.emplace_back(mpq_class(mpz_class(static_cast<long>(A)),
                                   mpz_class(std::to_string(f)) * mpz_class(std::to_string(n)) *
                                       mpz_class(std::to_string(phi))));
    }
    per_f.push_back(sum_exact(terms));
  }
  return sum_exact(per_f);
}

// ---------------------------------------------------------------------------
// Local n-series and chain checks

ExactRational local_n_series(u64 N, u64 f, u64 ell, FormulaVariant v) {
  require_odd_prime(ell, "local_n_series");
  const ExactRational x_odd(c_closed_bracket(N, f, ell, 1, v));
  const ExactRational x_even(c_closed_bracket(N, f, ell, 2, v));
  const ExactRational r = frac(1, static_cast<i64>(ell));
  const ExactRational denom = ExactRational(1) - r * r;
  const ExactRational series = x_odd * r / denom + x_even * r * r / denom;
  // l !| f: term_alpha = x_alpha / (l^alpha (l - 1));  l | f: y_alpha / l^{alpha+1}.
  if (f % ell != 0) return ExactRational(1) + series / ExactRational(static_cast<i64>(ell) - 1);
  return ExactRational(1) + series * r;
}

ExactRational expected_n_factor(u64 N, u64 f, u64 ell, FormulaVariant v) {
  require_odd_prime(ell, "expected_n_factor");
  if (f % ell == 0) return F2(ell, N, f, v);
  if (N % ell == 0) return F0(ell);
  return F1(ell, N);
}

bool local_n_sum_check(u64 N, u64 f, u64 ell, FormulaVariant v) {
  return local_n_series(N, f, ell, v) == expected_n_factor(N, f, ell, v);
}

ExactRational two_adic_n_series() {
  // term_0 = 1; term_nu = b_nu / 2^{nu+1} with b the parity-periodic bracket.
  const ExactRational b_odd(c_closed_bracket(1, 1, 2, 1, FormulaVariant::erratum));
  const ExactRational b_even(c_closed_bracket(1, 1, 2, 2, FormulaVariant::erratum));
  const ExactRational r = frac(1, 2);
  const ExactRational denom = ExactRational(1) - r * r;
  return ExactRational(1) + r * (b_odd * r / denom + b_even * r * r / denom);
}

bool euler_chain_check(u64 N, u64 m, FormulaVariant v) {
  require_square_divides(N, m, "euler_chain_check");
  bool ok = true;
  for (const auto& pp : arith::factorize(N)) {
    const u64 ell = pp.prime;
    const i64 l = static_cast<i64>(ell);
    const ExactRational base = frac(l, l - 1) * K_of_N_local(ell, N, v);
    ok = ok && F0(ell) * F4(ell, N, v) == base;
    if (m % ell == 0) {
      const ExactRational rhs = base * k_local(ell, N, m, v) / power(ell, 2 * nu(m, ell));
      ok = ok && F0(ell) * F5(ell, N, m, v) == rhs;
    }
  }
  for (u64 ell : arith::primes_up_to(50)) {
    if (ell == 2 || N % ell == 0) continue;
    ok = ok && F1(ell, N) * F3(ell, N) == coprime_factor(ell, N);
  }
  return ok;
}

AssemblyCheck kG_assembly_check(const GroupShape& G, FormulaVariant v) {
  const u64 N = G.order();
  if (N % 2 == 0 || N < 3) throw std::invalid_argument("kG_assembly_check: #G must be odd and at least 3");
  AssemblyCheck out;
  out.G = G;
  out.variant = v;
  for (u64 k = 1; k * k <= G.n2; ++k) {
    if (G.n2 % (k * k) != 0) continue;
    const int mu = arith::moebius(k);
    if (mu == 0) continue;
    const ExactRational term = K0_euler(N, k * G.n1, v, 3).finite;
    out.lhs += mu > 0 ? term : -term;
  }
  out.rhs = K_of_G(G, v, 3).finite * aut_ratio(G);
  return out;
}

MpsReport mps_average_report(u64 x, u64 L) {
  if (x < 3) throw std::invalid_argument("mps_average_report: x must be at least 3");
  if (L < 3) throw std::invalid_argument("mps_average_report: L must be at least 3");
  // Smallest-prime-factor table for N and N - 1.
  std::vector<u64> spf(x + 1, 0);
  for (u64 i = 2; i <= x; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= x; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  // Coprime factor at odd l: g(l) when l !| N - 1, h(l) when l | N - 1.
  auto g = [](double l) { return 1.0 - 1.0 / ((l - 1.0) * (l - 1.0)); };
  auto h = [](double l) { return 1.0 - 1.0 / ((l + 1.0) * (l - 1.0) * (l - 1.0)); };
  double all_odd = 1.0;
  for (u64 ell : primes_cached(L)) {
    if (ell != 2) all_odd *= g(static_cast<double>(ell));
  }
  MpsReport out;
  out.x = x;
  for (u64 N = 3; N <= x; N += 2) {
    double value = all_odd * (2.0 / 3.0);  // l = 2 always divides N - 1
    double phi_ratio = 1.0;
    for (u64 r = N; r > 1;) {
      const u64 ell = spf[r];
      unsigned e = 0;
      while (r % ell == 0) {
        r /= ell;
        ++e;
      }
      const double l = static_cast<double>(ell);
      if (ell <= L) value /= g(l);
      value *= 1.0 - 1.0 / (std::pow(l, e) * (l - 1.0));
      phi_ratio *= l / (l - 1.0);
    }
    for (u64 r = N - 1; r > 1;) {
      const u64 ell = spf[r];
      while (r % ell == 0) r /= ell;
      if (ell != 2 && ell <= L) value *= h(static_cast<double>(ell)) / g(static_cast<double>(ell));
    }
    out.partial_sum += value * phi_ratio / std::log(static_cast<double>(N));
  }
  const double lx = std::log(static_cast<double>(x));
  out.comparator = static_cast<double>(x) / (3.0 * lx);
  out.ratio = out.partial_sum / out.comparator;
  return out;
}

}  // namespace eccensus::constants
