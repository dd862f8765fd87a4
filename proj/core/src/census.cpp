#include "eccensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "eccensus/arith.hpp"
#include "eccensus/census_cache.hpp"
#include "eccensus/constants.hpp"
#include "eccensus/groups.hpp"
#include "eccensus/sieve.hpp"

namespace eccensus::census {

bool HasseWindow::contains(uint64_t p) const { return p >= first && p <= last; }

std::vector<uint64_t> HasseWindow::primes() const {
  // primes_in_interval is open at both ends.
  return arith::primes_in_interval(first == 0 ? 0 : first - 1, last + 1);
}

std::vector<uint64_t> HasseWindow::census_primes() const {
  std::vector<uint64_t> out;
  for (uint64_t p : primes()) {
    if (p > 3) out.push_back(p);
  }
  return out;
}

std::vector<uint64_t> HasseWindow::skipped_primes() const {
  std::vector<uint64_t> out;
  for (uint64_t p : primes()) {
    if (p <= 3) out.push_back(p);
  }
  return out;
}

HasseWindow hasse_window(uint64_t N) {
  if (N == 0) throw std::invalid_argument("hasse_window: N must be positive");
  // (p + 1 - N)^2 < 4p  <=>  (p - (N + 1))^2 < 4N  <=>  |p - (N + 1)| <= isqrt(4N - 1).
  const uint64_t s = arith::isqrt(4 * N - 1);
  return {N, N + 1 - s, N + 1 + s};
}

int64_t discriminant_poly(uint64_t N, uint64_t p) {
  const int64_t t = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(N);
  return t * t - 4 * static_cast<int64_t>(p);
}

int64_t d_reduced(uint64_t N, uint64_t p, uint64_t f) {
  const int64_t D = discriminant_poly(N, p);
  const int64_t f2 = static_cast<int64_t>(f * f);
  if (f == 0 || D % f2 != 0) {
    throw std::invalid_argument("d_reduced: f^2 does not divide D_N(p) for N=" + std::to_string(N) +
                                ", p=" + std::to_string(p) + ", f=" + std::to_string(f));
  }
  return D / f2;
}

// ---------------------------------------------------------------------------

CensusEngine::CensusEngine() : CensusEngine(Options{}) {}

CensusEngine::CensusEngine(Options options) : options_(std::move(options)) {
  if (options_.threads == 0) throw std::invalid_argument("CensusEngine: thread count must be at least 1");
  if (options_.cache_dir) store_ = std::make_unique<HistogramStore>(*options_.cache_dir);
}

CensusEngine::~CensusEngine() = default;

void CensusEngine::set_warning_sink(std::function<void(const std::string&)> sink) { sink_ = std::move(sink); }

void CensusEngine::warn(const std::string& message) const {
  if (sink_) sink_(message);
}

uint64_t CensusEngine::sweeps_computed() const {
  std::lock_guard lock(mu_);
  return computed_;
}

uint64_t CensusEngine::sweeps_loaded() const {
  std::lock_guard lock(mu_);
  return loaded_;
}

std::shared_ptr<const curves::ShapeHistogram> CensusEngine::histogram(uint64_t p) {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  }
  std::shared_ptr<const curves::ShapeHistogram> hist;
  bool from_disk = false;
  if (store_) {
    if (auto loaded = store_->load(p)) {
      hist = std::make_shared<const curves::ShapeHistogram>(std::move(*loaded));
      from_disk = true;
    }
  }
  if (!hist) {
    hist = std::make_shared<const curves::ShapeHistogram>(curves::sweep_prime(p));
    if (store_) {
      try {
        store_->save(*hist);
      } catch (const std::exception& e) {
        warn(std::string("census cache: ") + e.what());
      }
    }
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = memo_.emplace(p, hist);
  if (inserted) ++(from_disk ? loaded_ : computed_);
  return it->second;
}

void CensusEngine::prefetch(const std::vector<uint64_t>& primes) {
  std::vector<uint64_t> todo;
  {
    std::lock_guard lock(mu_);
    for (uint64_t p : primes) {
      if (p > 3 && !memo_.count(p)) todo.push_back(p);
    }
  }
  // Largest primes first: sweeps cost ~p^3, so this balances the workers.
  std::sort(todo.rbegin(), todo.rend());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  const unsigned workers = std::min<unsigned>(options_.threads, static_cast<unsigned>(todo.size()));
  if (workers <= 1) {
    for (uint64_t p : todo) histogram(p);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < todo.size(); i = next++) {
        try {
          histogram(todo[i]);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------

namespace {

void require_odd_pair(uint64_t N, uint64_t m, const char* who) {
  if (N == 0 || m == 0 || N % 2 == 0 || m % 2 == 0) {
    throw std::invalid_argument(std::string(who) + ": N and m must be odd and positive");
  }
  if (N % (m * m) != 0) throw std::invalid_argument(std::string(who) + ": need m^2 | N");
}

std::vector<uint64_t> census_primes_logged(CensusEngine* engine, uint64_t N) {
  const HasseWindow w = hasse_window(N);
  if (engine) {
    for (uint64_t p : w.skipped_primes()) {
      engine->warn("skipping window prime p=" + std::to_string(p) + " <= 3 for N=" + std::to_string(N));
    }
  }
  return w.census_primes();
}

ExactRational class_term(quadforms::ClassNumberCache& classes, uint64_t N, uint64_t p, uint64_t m) {
  if ((p - 1) % m != 0) return ExactRational(0);
  return classes.kronecker_class_number(d_reduced(N, p, m));
}

}  // namespace

std::vector<CensusRecord> schoof_identity_check(CensusEngine& engine, uint64_t N, uint64_t m) {
  require_odd_pair(N, m, "schoof_identity_check");
  const auto primes = census_primes_logged(&engine, N);
  engine.prefetch(primes);
  std::vector<CensusRecord> out;
  for (uint64_t p : primes) {
    CensusRecord r;
    r.N = N;
    r.m = m;
    r.p = p;
    r.weighted = curves::weighted_count_with_torsion(*engine.histogram(p), N, m);
    r.class_value = class_term(engine.class_numbers(), N, p, m);
    r.match = r.weighted == r.class_value;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CensusRecord> census_rows_for_group(CensusEngine& engine, const GroupShape& G) {
  const uint64_t N = G.order();
  const auto primes = census_primes_logged(&engine, N);
  engine.prefetch(primes);
  std::vector<CensusRecord> out;
  for (uint64_t p : primes) {
    CensusRecord r;
    r.N = N;
    r.N1 = G.n1;
    r.N2 = G.n2;
    r.p = p;
    r.weighted = curves::weighted_count_with_group(*engine.histogram(p), G);
    out.push_back(std::move(r));
  }
  return out;
}

ExactRational global_census_M_of_G(CensusEngine& engine, const GroupShape& G) {
  if (G.order() % 2 == 0) engine.warn("M(G) requested for even-order G=" + G.str());
  std::vector<ExactRational> terms;
  for (const auto& r : census_rows_for_group(engine, G)) terms.push_back(r.weighted);
  return sum_exact(terms);
}

ExactRational global_census_M_of_N_m(quadforms::ClassNumberCache& classes, uint64_t N, uint64_t m) {
  require_odd_pair(N, m, "global_census_M_of_N_m");
  std::vector<ExactRational> terms;
  for (uint64_t p : hasse_window(N).census_primes()) terms.push_back(class_term(classes, N, p, m));
  return sum_exact(terms);
}

ExactRational global_census_M_of_N_m(uint64_t N, uint64_t m) {
  quadforms::ClassNumberCache classes;
  return global_census_M_of_N_m(classes, N, m);
}

InclusionExclusion inclusion_exclusion_check(CensusEngine& engine, const GroupShape& G) {
  const uint64_t N = G.order();
  if (N % 2 == 0) throw std::invalid_argument("inclusion_exclusion_check: #G must be odd");
  InclusionExclusion out;
  out.G = G;
  std::vector<std::pair<uint64_t, int>> ks;  // (k N1, mu(k))
  for (uint64_t k = 1; k * k <= G.n2; ++k) {
    if (G.n2 % (k * k) != 0) continue;
    const int mu = arith::moebius(k);
    if (mu != 0) ks.emplace_back(k * G.n1, mu);
  }
  for (const auto& [m, mu] : ks) {
    const ExactRational term = global_census_M_of_N_m(engine.class_numbers(), N, m);
    out.class_route += mu > 0 ? term : -term;
  }
  std::vector<ExactRational> curve_terms;
  for (auto& r : census_rows_for_group(engine, G)) {
    for (const auto& [m, mu] : ks) {
      const ExactRational t = class_term(engine.class_numbers(), N, *r.p, m);
      r.class_value += mu > 0 ? t : -t;
    }
    r.match = r.weighted == r.class_value;
    curve_terms.push_back(r.weighted);
    out.breakdown.push_back(std::move(r));
  }
  out.curve_route = sum_exact(curve_terms);
  return out;
}

AsymptoticRow asymptotic_report(CensusEngine& engine, const GroupShape& G, uint64_t L) {
  AsymptoticRow row;
  row.G = G;
  const uint64_t N = G.order();
  if (N == 1) {
    row.skipped = true;
    return row;
  }
  if (N % 2 == 0) throw std::invalid_argument("asymptotic_report: #G must be odd");
  row.M = global_census_M_of_G(engine, G);
  const double K = constants::K_of_G(G, constants::FormulaVariant::erratum, L).value();
  // (#G)^2 / #Aut(G) = #G * (#G / #Aut(G)).
  row.predicted = K * static_cast<double>(N) * constants::aut_ratio(G).to_double() / std::log(static_cast<double>(N));
  row.ratio = row.M.to_double() / row.predicted;
  return row;
}

}  // namespace eccensus::census
