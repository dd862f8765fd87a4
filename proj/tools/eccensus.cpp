// eccensus: censuses, verification suites and constant tables.
//
// Exit codes: 0 success, 1 internal error, 2 invalid configuration,
// 3 a verification case failed (the report is still written).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eccensus/arith.hpp"
#include "eccensus/census.hpp"
#include "eccensus/constants.hpp"
#include "eccensus/groups.hpp"
#include "eccensus/local_counts.hpp"
#include "eccensus/quadforms.hpp"
#include "eccensus/sieve.hpp"
#include "eccensus/statistics.hpp"
#include "json.hpp"

namespace {

using namespace eccensus;
using constants::FormulaVariant;
using curves::GroupShape;
using nlohmann::json;
using std::uint64_t;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerifyFailed = 3;
constexpr const char* kDefaultCacheDir = "census-cache";
constexpr const char* kCacheEnv = "ECCENSUS_CACHE";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<uint64_t> order;
  std::vector<std::string> groups;
  std::optional<uint64_t> m;
  std::optional<uint64_t> nmax;
  std::optional<uint64_t> gmax;
  uint64_t U = 10'000;
  uint64_t V = 30;
  std::optional<uint64_t> L;  // --ell-cutoff
  std::string variant = "erratum";
  unsigned threads = 1;
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "csv";
  // Prime-statistics parameters.
  uint64_t x = 100'000;
  uint64_t y = 1'000;
  uint64_t q = 100;
  uint64_t a = 1;

  uint64_t cutoff() const { return L.value_or(10'000); }
};

std::vector<FormulaVariant> variants_of(const RunConfig& c) {
  if (c.variant == "both") return {FormulaVariant::erratum, FormulaVariant::original};
  return {constants::parse_variant(c.variant)};
}

std::string vname(FormulaVariant v) { return constants::to_string(v); }

std::optional<std::filesystem::path> resolve_cache_dir(const RunConfig& c) {
  if (c.no_cache) return std::nullopt;
  if (!c.cache_dir.empty()) return std::filesystem::path(c.cache_dir);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
  return std::filesystem::path(kDefaultCacheDir);
}

void log(const std::string& message) { std::cerr << "eccensus: " << message << '\n'; }

void write_output(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file " + c.out);
  f << text;
  if (!f) throw std::runtime_error("failed writing output file " + c.out);
}

// ---------------------------------------------------------------------------
// Tables: one header and rows of strings, rendered as CSV or a JSON array.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
        out.push_back(std::move(obj));
      }
      return out.dump(2) + "\n";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        if (r[i].is_string()) {
          os << r[i].get<std::string>();
        } else if (r[i].is_null()) {
          // empty cell
        } else {
          os << r[i].dump();
        }
      }
      os << '\n';
    }
    return os.str();
  }
};

std::string q(const ExactRational& r) { return r.str(); }

json decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation helpers.

uint64_t require_odd_order(const RunConfig& c) {
  if (!c.order) throw ConfigError("--order is required");
  if (*c.order == 0 || *c.order % 2 == 0) {
    throw ConfigError("--order must be odd and positive (got " + std::to_string(*c.order) + ")");
  }
  return *c.order;
}

GroupShape parse_group(const std::string& text) {
  GroupShape G;
  try {
    G = GroupShape::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--group: ") + e.what());
  }
  if (G.order() % 2 == 0) throw ConfigError("--group must have odd order (got " + text + ")");
  return G;
}

std::vector<GroupShape> odd_groups_up_to(uint64_t max_order, uint64_t min_order) {
  std::vector<GroupShape> out;
  for (uint64_t n1 = 1; n1 * n1 <= max_order; n1 += 2) {
    for (uint64_t n2 = 1; n1 * n1 * n2 <= max_order; n2 += 2) {
      if (n1 * n1 * n2 >= min_order) out.push_back({n1, n2});
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupShape& a, const GroupShape& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.n1 < b.n1;
  });
  return out;
}

std::vector<GroupShape> groups_from(const RunConfig& c, uint64_t default_gmax, uint64_t min_order) {
  if (!c.groups.empty()) {
    std::vector<GroupShape> out;
    for (const auto& g : c.groups) out.push_back(parse_group(g));
    return out;
  }
  const uint64_t gmax = c.gmax.value_or(default_gmax);
  if (gmax < min_order) throw ConfigError("--gmax leaves no groups to check");
  return odd_groups_up_to(gmax, min_order);
}

std::vector<uint64_t> odd_m_values(uint64_t N) {
  std::vector<uint64_t> out;
  for (uint64_t m = 1; m * m <= N; m += 2) {
    if (N % (m * m) == 0) out.push_back(m);
  }
  return out;
}

void check_m(uint64_t N, uint64_t m) {
  if (m == 0 || m % 2 == 0 || N % (m * m) != 0) {
    throw ConfigError("--m must be odd with m^2 | N (got N=" + std::to_string(N) + ", m=" + std::to_string(m) + ")");
  }
}

std::unique_ptr<census::CensusEngine> make_engine(const RunConfig& c) {
  auto engine = std::make_unique<census::CensusEngine>(census::CensusEngine::Options{c.threads, resolve_cache_dir(c)});
  engine->set_warning_sink([](const std::string& w) { log(w); });
  return engine;
}

// ---------------------------------------------------------------------------
// census

const std::vector<std::string> kCensusHeader = {"N", "N1", "N2", "m", "p", "weighted", "class_value", "match"};

std::vector<json> census_row(const census::CensusRecord& r) {
  return {r.N, r.N1, r.N2, r.m, r.p ? json(*r.p) : json(), q(r.weighted), q(r.class_value), r.match};
}

int cmd_census(const RunConfig& c) {
  Table t{kCensusHeader, {}};
  bool all_match = true;
  auto engine = make_engine(c);
  if (!c.groups.empty()) {
    std::vector<GroupShape> groups;
    for (const auto& g : c.groups) groups.push_back(parse_group(g));
    std::vector<uint64_t> primes;
    for (const auto& G : groups) {
      for (uint64_t p : census::hasse_window(G.order()).census_primes()) primes.push_back(p);
    }
    engine->prefetch(primes);
    for (const auto& G : groups) {
      for (const auto& r : census::inclusion_exclusion_check(*engine, G).breakdown) {
        all_match = all_match && r.match;
        t.rows.push_back(census_row(r));
      }
    }
  } else {
    std::vector<uint64_t> orders;
    if (c.order) {
      orders.push_back(require_odd_order(c));
    } else if (c.nmax) {
      for (uint64_t N = 1; N <= *c.nmax; N += 2) orders.push_back(N);
    } else {
      throw ConfigError("census needs --group, --order or --nmax");
    }
    std::vector<uint64_t> primes;
    for (uint64_t N : orders) {
      for (uint64_t p : census::hasse_window(N).census_primes()) primes.push_back(p);
    }
    engine->prefetch(primes);
    for (uint64_t N : orders) {
      std::vector<uint64_t> ms;
      if (c.m) {
        check_m(N, *c.m);
        ms.push_back(*c.m);
      } else {
        ms = odd_m_values(N);
      }
      for (uint64_t m : ms) {
        for (const auto& r : census::schoof_identity_check(*engine, N, m)) {
          all_match = all_match && r.match;
          t.rows.push_back(census_row(r));
        }
      }
    }
  }
  log("census: " + std::to_string(t.rows.size()) + " rows, " + std::to_string(engine->sweeps_computed()) +
      " sweeps computed, " + std::to_string(engine->sweeps_loaded()) + " loaded from cache");
  write_output(c, t.render(c.format));
  if (!all_match) {
    log("census: sweep and class-number values disagree on some rows");
    return kExitInternal;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct Report {
  std::string suite;
  json parameters = json::object();
  json cases = json::array();
  uint64_t passed = 0, failed = 0, skipped = 0;

  void add(json id, std::optional<FormulaVariant> variant, bool pass, json details, json counterexample = nullptr) {
    json entry = {{"id", std::move(id)},
                  {"variant", variant ? json(vname(*variant)) : json()},
                  {"status", pass ? "pass" : "fail"},
                  {"details", std::move(details)},
                  {"counterexample", pass ? json() : std::move(counterexample)}};
    (pass ? passed : failed) += 1;
    cases.push_back(std::move(entry));
  }
  void skip(json id, std::optional<FormulaVariant> variant, json details) {
    cases.push_back({{"id", std::move(id)},
                     {"variant", variant ? json(vname(*variant)) : json()},
                     {"status", "skipped"},
                     {"details", std::move(details)},
                     {"counterexample", nullptr}});
    ++skipped;
  }
  json to_json() const {
    return {{"suite", suite},
            {"parameters", parameters},
            {"cases", cases},
            {"summary", {{"total", passed + failed + skipped}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
            {"all_pass", failed == 0}};
  }
};

void verify_schoof(const RunConfig& c, Report& rep) {
  const uint64_t nmax = c.nmax.value_or(300);
  if (nmax < 5) throw ConfigError("--nmax must be at least 5");
  rep.parameters = {{"nmax", nmax}};
  auto engine = make_engine(c);
  std::vector<uint64_t> primes;
  for (uint64_t N = 5; N <= nmax; N += 2) {
    for (uint64_t p : census::hasse_window(N).census_primes()) primes.push_back(p);
  }
  engine->prefetch(primes);
  for (uint64_t N = 5; N <= nmax; N += 2) {
    for (uint64_t m : odd_m_values(N)) {
      const auto records = census::schoof_identity_check(*engine, N, m);
      json bad = json::array();
      for (const auto& r : records) {
        if (!r.match) bad.push_back({{"p", *r.p}, {"sweep", q(r.weighted)}, {"class_number", q(r.class_value)}});
      }
      rep.add({{"N", N}, {"m", m}}, std::nullopt, bad.empty(), {{"primes", records.size()}}, bad);
    }
  }
}

void verify_sieve(const RunConfig& c, Report& rep) {
  const auto groups = groups_from(c, 300, 1);
  rep.parameters = {{"gmax", c.groups.empty() ? json(c.gmax.value_or(300)) : json()}};
  auto engine = make_engine(c);
  std::vector<uint64_t> primes;
  for (const auto& G : groups) {
    for (uint64_t p : census::hasse_window(G.order()).census_primes()) primes.push_back(p);
  }
  engine->prefetch(primes);
  for (const auto& G : groups) {
    const auto ie = census::inclusion_exclusion_check(*engine, G);
    json bad = json::array();
    for (const auto& r : ie.breakdown) {
      if (!r.match) bad.push_back({{"p", *r.p}, {"curve_route", q(r.weighted)}, {"class_route", q(r.class_value)}});
    }
    rep.add({{"N1", G.n1}, {"N2", G.n2}}, std::nullopt, ie.pass(),
            {{"group", G.str()}, {"curve_route", q(ie.curve_route)}, {"class_route", q(ie.class_route)}}, bad);
  }
}

void verify_lemma14(const RunConfig& c, Report& rep) {
  const uint64_t nmax = c.nmax.value_or(225);
  const uint64_t ell_max = c.L.value_or(13);
  constexpr uint64_t kMaxLocalModulus = 2'000'000;
  if (ell_max < 3 || ell_max > 13) throw ConfigError("--ell-cutoff for lemma14 must lie in [3, 13]");
  rep.parameters = {{"nmax", nmax}, {"ell_max", ell_max}};
  std::set<std::int64_t> normalizations;
  for (FormulaVariant v : variants_of(c)) {
    for (uint64_t ell : arith::primes_in_interval(2, ell_max + 1)) {
      for (uint64_t N = ell; N <= nmax; N += 2 * ell) {
        const unsigned vN = arith::valuation(N, ell).exponent;
        if (vN % 2 != 0) continue;
        const uint64_t f = arith::ipow(ell, vN / 2);
        normalizations.insert(constants::c_char_sum(N, f, 1));
        for (unsigned alpha = 1; arith::ipow(ell, alpha + vN) <= kMaxLocalModulus; ++alpha) {
          const uint64_t n = arith::ipow(ell, alpha);
          const ExactRational brute(constants::c_char_sum(N, f, n),
                                    constants::kCharSumNormalization * static_cast<std::int64_t>(n / ell));
          const auto closed = constants::c_closed_prime_power(N, f, ell, alpha, v);
          rep.add({{"N", N}, {"f", f}, {"ell", ell}, {"alpha", alpha}}, v, brute == closed,
                  {{"brute", q(brute)}, {"closed_form", q(closed)}},
                  {{"brute", q(brute)}, {"closed_form", q(closed)}});
        }
      }
    }
  }
  json seen = json::array();
  for (auto k : normalizations) seen.push_back(k);
  const bool constant = normalizations.size() == 1 && *normalizations.begin() == constants::kCharSumNormalization;
  rep.add("normalization", std::nullopt, constant, {{"c_of_1", seen}}, {{"c_of_1", seen}});
}

void verify_assembly(const RunConfig& c, Report& rep) {
  const auto groups = groups_from(c, 500, 3);
  rep.parameters = {{"gmax", c.groups.empty() ? json(c.gmax.value_or(500)) : json()}};
  for (FormulaVariant v : variants_of(c)) {
    for (const auto& G : groups) {
      const auto a = constants::kG_assembly_check(G, v);
      rep.add({{"N1", G.n1}, {"N2", G.n2}, {"variant", vname(v)}}, v, a.pass(),
              {{"group", G.str()}, {"lhs", q(a.lhs)}, {"rhs", q(a.rhs)}}, {{"lhs", q(a.lhs)}, {"rhs", q(a.rhs)}});
    }
  }
}

void verify_gl2(const RunConfig& c, Report& rep) {
  const uint64_t ell_max = c.L.value_or(13);
  if (ell_max < 3 || ell_max > 31) throw ConfigError("--ell-cutoff for gl2 must lie in [3, 31]");
  rep.parameters = {{"ell_max", ell_max}};
  for (uint64_t ell : arith::primes_in_interval(2, ell_max + 1)) {
    for (uint64_t r = 0; r < ell; ++r) {
      const auto g = constants::gl2_census(r, ell);
      json details = {{"count", g.count}, {"group_order", g.group_order}, {"ratio", q(g.ratio)}};
      if (!g.in_scope()) {
        details["reason"] = "l divides N: no coprime Euler factor";
        rep.skip({{"ell", ell}, {"residue", r}}, std::nullopt, details);
        continue;
      }
      details["factor"] = q(g.expected);
      rep.add({{"ell", ell}, {"residue", r}}, std::nullopt, g.pass(), details,
              {{"ratio", q(g.ratio)}, {"factor", q(g.expected)}});
    }
  }
}

void verify_aut(const RunConfig& c, Report& rep) {
  const auto groups = groups_from(c, 225, 1);
  rep.parameters = {{"gmax", c.groups.empty() ? json(c.gmax.value_or(225)) : json()}};
  for (const auto& G : groups) {
    if (G.order() > constants::kBruteAutLimit) throw ConfigError("aut: group order above brute-force limit");
    const uint64_t aut = constants::brute_aut_count(G);
    const ExactRational brute(static_cast<std::int64_t>(G.order()), static_cast<std::int64_t>(aut));
    const auto formula = constants::aut_ratio(G);
    rep.add({{"N1", G.n1}, {"N2", G.n2}}, std::nullopt, brute == formula,
            {{"group", G.str()}, {"aut", aut}, {"ratio", q(formula)}},
            {{"brute_ratio", q(brute)}, {"formula_ratio", q(formula)}});
  }
}

int cmd_verify(const RunConfig& c, const std::string& suite) {
  Report rep;
  rep.suite = suite;
  if (suite == "schoof") {
    verify_schoof(c, rep);
  } else if (suite == "sieve") {
    verify_sieve(c, rep);
  } else if (suite == "lemma14") {
    verify_lemma14(c, rep);
  } else if (suite == "assembly") {
    verify_assembly(c, rep);
  } else if (suite == "gl2") {
    verify_gl2(c, rep);
  } else if (suite == "aut") {
    verify_aut(c, rep);
  } else {
    throw ConfigError("unknown verify suite " + suite);
  }
  rep.parameters["variant"] = c.variant;
  write_output(c, rep.to_json().dump(2) + "\n");
  log("verify " + suite + ": " + std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed, " +
      std::to_string(rep.skipped) + " skipped");
  return rep.failed == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// constants

void log_tail(const std::string& what, const constants::EulerValue& e, uint64_t L) {
  std::ostringstream os;
  os << what << ": product over l <= " << L << " not dividing N, relative tail bound " << std::setprecision(3)
     << e.tail_bound;
  log(os.str());
}

// Appends a `differs` column when both variants are tabulated: rows sharing
// `key` compare their finite values.
void add_differs(Table& t, const RunConfig& c, std::size_t key_columns, std::size_t value_column) {
  if (c.variant != "both") return;
  t.header.push_back("differs");
  for (auto& row : t.rows) {
    bool differs = false;
    for (const auto& other : t.rows) {
      bool same_key = true;
      for (std::size_t i = 0; i < key_columns; ++i) same_key = same_key && row[i] == other[i];
      if (same_key && other[value_column] != row[value_column]) differs = true;
    }
    row.push_back(differs);
  }
}

Table constants_kn(const RunConfig& c) {
  const uint64_t N = require_odd_order(c);
  if (N < 3) throw ConfigError("--order must be at least 3");
  Table t{{"N", "variant", "finite", "tail", "tail_bound", "value"}, {}};
  for (FormulaVariant v : variants_of(c)) {
    const auto e = constants::K_of_N(N, v, c.cutoff());
    log_tail("K(N)", e, c.cutoff());
    t.rows.push_back({N, vname(v), q(e.finite), decimal(e.tail), decimal(e.tail_bound), decimal(e.value())});
  }
  add_differs(t, c, 1, 2);
  return t;
}

Table constants_knm(const RunConfig& c) {
  const uint64_t N = require_odd_order(c);
  const uint64_t m = c.m.value_or(1);
  check_m(N, m);
  Table t{{"N", "m", "variant", "value"}, {}};
  for (FormulaVariant v : variants_of(c)) t.rows.push_back({N, m, vname(v), q(constants::K_of_N_m(N, m, v))});
  add_differs(t, c, 2, 3);
  return t;
}

Table constants_kg(const RunConfig& c) {
  if (c.groups.empty()) throw ConfigError("kg needs --group");
  Table t{{"N1", "N2", "variant", "finite", "tail", "tail_bound", "value", "aut_ratio"}, {}};
  for (const auto& g : c.groups) {
    const auto G = parse_group(g);
    if (G.order() < 3) throw ConfigError("kg needs a non-trivial group");
    for (FormulaVariant v : variants_of(c)) {
      const auto e = constants::K_of_G(G, v, c.cutoff());
      log_tail("K(G)", e, c.cutoff());
      t.rows.push_back({G.n1, G.n2, vname(v), q(e.finite), decimal(e.tail), decimal(e.tail_bound), decimal(e.value()),
                        q(constants::aut_ratio(G))});
    }
  }
  add_differs(t, c, 2, 3);
  return t;
}

Table constants_k0(const RunConfig& c) {
  const uint64_t N = require_odd_order(c);
  const uint64_t m = c.m.value_or(1);
  check_m(N, m);
  const constants::TruncationParams params{c.U, c.V, c.cutoff()};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const ExactRational truncated = constants::K0_truncated(N, m, params);
  Table t{{"N", "m", "U", "V", "L", "variant", "truncated", "truncated_decimal", "euler_finite", "euler_tail",
           "euler", "tail_bound", "gap"},
          {}};
  for (FormulaVariant v : variants_of(c)) {
    const auto e = constants::K0_euler(N, m, v, c.cutoff());
    log_tail("K0 Euler route", e, c.cutoff());
    const double gap = truncated.to_double() / e.value() - 1.0;
    t.rows.push_back({N, m, c.U, c.V, c.cutoff(), vname(v), q(truncated), decimal(truncated.to_double()), q(e.finite),
                      decimal(e.tail), decimal(e.value()), decimal(e.tail_bound), decimal(gap)});
  }
  add_differs(t, c, 5, 8);
  return t;
}

Table constants_factors(const RunConfig& c) {
  const uint64_t N = require_odd_order(c);
  const uint64_t m = c.m.value_or(1);
  check_m(N, m);
  using constants::FactorKind;
  const std::vector<FactorKind> kinds = {FactorKind::F0, FactorKind::F1, FactorKind::F2, FactorKind::F3,
                                         FactorKind::F4, FactorKind::F5, FactorKind::F6, FactorKind::F7,
                                         FactorKind::F8, FactorKind::Klocal};
  Table t{{"ell", "kind", "variant", "numerator", "denominator"}, {}};
  for (const auto& pp : arith::factorize(N)) {
    const uint64_t ell = pp.prime;
    // F2 is tabulated at f = l^ceil(nu/2), the conductor part matching N.
    const uint64_t f = arith::ipow(ell, (pp.exponent + 1) / 2);
    for (FactorKind k : kinds) {
      const uint64_t aux = k == FactorKind::F2 ? f : m;
      for (FormulaVariant v : variants_of(c)) {
        ExactRational value;
        try {
          value = constants::f_factor(k, ell, N, aux, v);
        } catch (const std::invalid_argument&) {
          continue;  // kind not defined at this (l, N, aux)
        }
        t.rows.push_back({ell, constants::to_string(k), vname(v), value.numerator_str(), value.denominator_str()});
      }
    }
  }
  if (c.variant == "both") {
    t.header.push_back("differs");
    for (auto& row : t.rows) {
      bool differs = false;
      for (const auto& other : t.rows) {
        if (other[0] == row[0] && other[1] == row[1] && (other[3] != row[3] || other[4] != row[4])) differs = true;
      }
      row.push_back(differs);
    }
  }
  return t;
}

Table constants_mps(const RunConfig& c) {
  const uint64_t x = c.nmax.value_or(c.x);
  const auto r = constants::mps_average_report(x, c.cutoff());
  return {{"x", "L", "partial_sum", "comparator", "ratio"},
          {{x, c.cutoff(), decimal(r.partial_sum), decimal(r.comparator), decimal(r.ratio)}}};
}

Table constants_bdh(const RunConfig& c) {
  const auto r = census::bdh_variance_sum(c.x, c.y, c.q);
  return {{"X", "Y", "Q", "variance_sum", "comparator", "ratio"},
          {{c.x, c.y, c.q, decimal(r.sum), decimal(r.comparator), decimal(r.ratio)}}};
}

Table constants_theta(const RunConfig& c) {
  const auto r = census::theta_and_discrepancy(c.x, c.y, c.q, c.a);
  return {{"X", "Y", "q", "a", "theta", "discrepancy"}, {{c.x, c.y, c.q, c.a, decimal(r.theta), decimal(r.discrepancy)}}};
}

Table constants_classes(const RunConfig& c) {
  const uint64_t dmax = c.nmax.value_or(100);
  Table t{{"d", "h", "w", "H"}, {}};
  quadforms::ClassNumberCache cache;
  for (std::int64_t d = -3; d >= -static_cast<std::int64_t>(dmax); --d) {
    if (!quadforms::Discriminant::is_valid(d)) continue;
    const auto cd = cache.get(d);
    t.rows.push_back({d, cd.h, cd.w, q(cache.kronecker_class_number(d))});
  }
  return t;
}

int cmd_constants(const RunConfig& c, const std::string& what) {
  Table t;
  if (what == "k0") {
    t = constants_k0(c);
  } else if (what == "kn") {
    t = constants_kn(c);
  } else if (what == "knm") {
    t = constants_knm(c);
  } else if (what == "kg") {
    t = constants_kg(c);
  } else if (what == "factors") {
    t = constants_factors(c);
  } else if (what == "mps") {
    t = constants_mps(c);
  } else if (what == "bdh") {
    t = constants_bdh(c);
  } else if (what == "theta") {
    t = constants_theta(c);
  } else if (what == "classes") {
    t = constants_classes(c);
  } else {
    throw ConfigError("unknown constants table " + what);
  }
  write_output(c, t.render(c.format));
  return kExitOk;
}

void add_common_options(CLI::App& app, RunConfig& c) {
  app.add_option("-N,--order", c.order, "Target group order N");
  app.add_option("--group", c.groups, "Group Z/N1 x Z/(N1 N2) written N1xN1N2, e.g. 3x9 (repeatable)");
  app.add_option("--m", c.m, "Required rational m-torsion (m odd, m^2 | N)");
  app.add_option("--nmax", c.nmax, "Largest N (census/verify), x (mps) or |d| (classes)");
  app.add_option("--gmax", c.gmax, "Largest group order for group sweeps");
  app.add_option("--u", c.U, "Truncation: n <= U")->check(CLI::PositiveNumber);
  app.add_option("--v", c.V, "Truncation: f = m g with g <= V")->check(CLI::PositiveNumber);
  app.add_option("--ell-cutoff", c.L, "Cutoff L for Euler products (gl2/lemma14: largest l)")->check(CLI::Range(3ull, 100'000'000ull));
  app.add_option("--variant", c.variant, "Formula variant")->check(CLI::IsMember({"original", "erratum", "both"}));
  app.add_option("--threads", c.threads, "Worker threads for curve sweeps")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", c.out, "Output file (default: stdout)");
  app.add_option("--cache-dir", c.cache_dir, std::string("Sweep cache directory (default: $") + kCacheEnv + " or ./" +
                                                  kDefaultCacheDir + ")");
  app.add_flag("--no-cache", c.no_cache, "Do not read or write the sweep cache");
  app.add_option("--format", c.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--x", c.x, "Interval start X (bdh/theta) or x (mps)")->check(CLI::PositiveNumber);
  app.add_option("--y", c.y, "Interval length Y")->check(CLI::PositiveNumber);
  app.add_option("--q", c.q, "Modulus q (theta) or largest modulus Q (bdh)")->check(CLI::PositiveNumber);
  app.add_option("--a", c.a, "Residue a (theta)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic-curve group censuses, Euler-product constants and verification suites"};
  app.require_subcommand(1);
  RunConfig config;

  auto* census_cmd = app.add_subcommand("census", "Per-prime weighted curve counts against class numbers (CSV/JSON)");
  add_common_options(*census_cmd, config);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify_cmd->require_subcommand(1);
  std::string chosen;
  for (const char* suite : {"schoof", "sieve", "lemma14", "assembly", "gl2", "aut"}) {
    auto* s = verify_cmd->add_subcommand(suite);
    add_common_options(*s, config);
    s->callback([&chosen, suite] { chosen = suite; });
  }
  verify_cmd->get_subcommand("schoof")->description("Curve sweeps against class numbers for every odd N <= nmax");
  verify_cmd->get_subcommand("sieve")->description("Curve-route M(G) against the class-number inclusion-exclusion");
  verify_cmd->get_subcommand("lemma14")->description("Balanced-case character sums against the closed forms");
  verify_cmd->get_subcommand("assembly")->description("Euler-product assembly of K(G) from K0");
  verify_cmd->get_subcommand("gl2")->description("GL2(F_l) trace census against the coprime Euler factor");
  verify_cmd->get_subcommand("aut")->description("Automorphism-count formula against brute force");

  auto* constants_cmd = app.add_subcommand("constants", "Evaluate Euler products, series and prime statistics");
  constants_cmd->require_subcommand(1);
  for (const char* what : {"k0", "kn", "knm", "kg", "factors", "mps", "bdh", "theta", "classes"}) {
    auto* s = constants_cmd->add_subcommand(what);
    add_common_options(*s, config);
    s->callback([&chosen, what] { chosen = what; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (census_cmd->parsed()) return cmd_census(config);
    if (verify_cmd->parsed()) return cmd_verify(config, chosen);
    if (constants_cmd->parsed()) return cmd_constants(config, chosen);
    return kExitConfig;
  } catch (const ConfigError& e) {
    log(std::string("invalid configuration: ") + e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    log(std::string("invalid configuration: ") + e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    log(std::string("internal error: ") + e.what());
    return kExitInternal;
  }
}
