#pragma once

// Hasse-window censuses: for a target order N (or group G) sum the
// automorphism-weighted curve counts M_p over every prime p whose Hasse
// interval contains N, either by sweeping all curves over F_p or through
// Kronecker class numbers.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eccensus/curves.hpp"
#include "eccensus/quadforms.hpp"
#include "eccensus/rational.hpp"

namespace eccensus::census {

using curves::GroupShape;
using std::int64_t;
using std::uint64_t;

/// Integers p with (p + 1 - N)^2 < 4p, i.e. N^- < p < N^+ with
/// N^(+-) = (sqrt N +- 1)^2. Computed with integers only:
/// the window is [N + 1 - s, N + 1 + s] with s = isqrt(4N - 1).
struct HasseWindow {
  uint64_t N = 0;
  uint64_t first = 0;  // smallest integer in the window
  uint64_t last = 0;   // largest integer in the window

  bool contains(uint64_t p) const;
  /// Every prime in the window (may include 2 and 3 for N <= 7).
  std::vector<uint64_t> primes() const;
  /// Primes used by censuses: the window primes above 3.
  std::vector<uint64_t> census_primes() const;
  /// Window primes <= 3, which censuses skip.
  std::vector<uint64_t> skipped_primes() const;
};

HasseWindow hasse_window(uint64_t N);

/// D_N(p) = (p + 1 - N)^2 - 4p.
int64_t discriminant_poly(uint64_t N, uint64_t p);
/// D_N(p) / f^2; throws std::invalid_argument unless f^2 | D_N(p).
int64_t d_reduced(uint64_t N, uint64_t p, uint64_t f);

struct CensusRecord {
  uint64_t N = 0;
  uint64_t N1 = 1;
  uint64_t N2 = 1;
  uint64_t m = 1;
  std::optional<uint64_t> p;
  ExactRational weighted;     // curve-sweep value
  ExactRational class_value;  // class-number value
  bool match = false;
};

class HistogramStore;

/// Shared state for censuses: per-prime sweep histograms (memory and,
/// optionally, disk), a class-number memo and a worker count. Thread-safe.
class CensusEngine {
 public:
  struct Options {
    unsigned threads = 1;
    std::optional<std::filesystem::path> cache_dir;
  };

  CensusEngine();
  explicit CensusEngine(Options options);
  ~CensusEngine();
  CensusEngine(const CensusEngine&) = delete;
  CensusEngine& operator=(const CensusEngine&) = delete;

  /// Sweep of all curves over F_p (p > 3), computed once.
  std::shared_ptr<const curves::ShapeHistogram> histogram(uint64_t p);
  /// Sweeps every listed prime, using up to `threads` workers.
  void prefetch(const std::vector<uint64_t>& primes);

  quadforms::ClassNumberCache& class_numbers() { return classes_; }

  /// Receives warnings (skipped small primes, unreadable cache files).
  void set_warning_sink(std::function<void(const std::string&)> sink);
  void warn(const std::string& message) const;

  unsigned threads() const { return options_.threads; }
  uint64_t sweeps_computed() const;
  uint64_t sweeps_loaded() const;

 private:
  Options options_;
  std::unique_ptr<HistogramStore> store_;
  mutable std::mutex mu_;
  std::map<uint64_t, std::shared_ptr<const curves::ShapeHistogram>> memo_;
  quadforms::ClassNumberCache classes_;
  std::function<void(const std::string&)> sink_;
  uint64_t computed_ = 0;
  uint64_t loaded_ = 0;
};

/// One record per census prime: curve-sweep M_p(N; m) against
/// H(D_N(p)/m^2) if m | p - 1, else 0. N, m odd with m^2 | N.
std::vector<CensusRecord> schoof_identity_check(CensusEngine& engine, uint64_t N, uint64_t m);

/// M(G) = sum over census primes of M_p(G), from curve sweeps.
ExactRational global_census_M_of_G(CensusEngine& engine, const GroupShape& G);
/// Per-prime M_p(G) rows (class_value left empty, match false).
std::vector<CensusRecord> census_rows_for_group(CensusEngine& engine, const GroupShape& G);

/// M(N; m) = sum over census primes p = 1 mod m of H(D_N(p)/m^2).
ExactRational global_census_M_of_N_m(quadforms::ClassNumberCache& classes, uint64_t N, uint64_t m);
ExactRational global_census_M_of_N_m(uint64_t N, uint64_t m);

struct InclusionExclusion {
  GroupShape G;
  ExactRational curve_route;  // M(G) from sweeps
  ExactRational class_route;  // sum_{k^2 | N2} mu(k) M(N; k N1)
  /// Per-prime curve-route values and class-route values when they disagree.
  std::vector<CensusRecord> breakdown;
  bool pass() const { return curve_route == class_route; }
};
InclusionExclusion inclusion_exclusion_check(CensusEngine& engine, const GroupShape& G);

struct AsymptoticRow {
  GroupShape G;
  bool skipped = false;       // #G = 1
  ExactRational M;            // census value
  double predicted = 0.0;     // K(G) (#G)^2 / (#Aut(G) log #G)
  double ratio = 0.0;         // M / predicted
};
AsymptoticRow asymptotic_report(CensusEngine& engine, const GroupShape& G, uint64_t L);

}  // namespace eccensus::census
