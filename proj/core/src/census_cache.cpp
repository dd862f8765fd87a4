#include "eccensus/census_cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eccensus/arith.hpp"

namespace eccensus::census {

namespace fs = std::filesystem;

HistogramStore::HistogramStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path HistogramStore::path_for(std::uint64_t p) const {
  return dir_ / ("shape-hist-v1-p" + std::to_string(p) + ".csv");
}

std::string HistogramStore::serialize(const curves::ShapeHistogram& hist) {
  std::ostringstream out;
  out << kHistogramSchema << '\n' << "p,N,N1,count\n";
  for (const auto& [key, count] : hist.counts) {
    out << hist.p << ',' << key.first << ',' << key.second << ',' << count << '\n';
  }
  return out.str();
}

std::optional<curves::ShapeHistogram> HistogramStore::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHistogramSchema) return std::nullopt;
  if (!std::getline(in, line) || line != "p,N,N1,count") return std::nullopt;
  curves::ShapeHistogram hist;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::uint64_t f[4];
    std::istringstream row(line);
    std::string cell;
    for (auto& v : f) {
      if (!std::getline(row, cell, ',')) return std::nullopt;
      try {
        std::size_t used = 0;
        v = std::stoull(cell, &used);
        if (used != cell.size()) return std::nullopt;
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (hist.p == 0) hist.p = f[0];
    if (f[0] != hist.p || f[3] == 0) return std::nullopt;
    if (!hist.counts.emplace(std::make_pair(f[1], f[2]), f[3]).second) return std::nullopt;
  }
  if (hist.p <= 3 || !arith::is_prime(hist.p)) return std::nullopt;
  // Every nonsingular (a, b) appears exactly once: p^2 - p models.
  if (hist.total_models() != hist.p * hist.p - hist.p) return std::nullopt;
  return hist;
}

std::optional<curves::ShapeHistogram> HistogramStore::load(std::uint64_t p) const {
  std::ifstream in(path_for(p), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  auto hist = parse(buf.str());
  if (hist && hist->p != p) return std::nullopt;
  return hist;
}

void HistogramStore::save(const curves::ShapeHistogram& hist) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  std::random_device rd;
  const fs::path tmp = dir_ / (path_for(hist.p).filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << serialize(hist);
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path_for(hist.p), ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot publish " + path_for(hist.p).string());
  }
}

}  // namespace eccensus::census
