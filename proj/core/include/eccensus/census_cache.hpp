#pragma once

// On-disk store for per-prime sweep histograms. One CSV file per prime:
//
//   # eccensus shape-histogram v1
//   p,N,N1,count
//   101,90,1,312
//   ...
//
// Files are written to a temporary name and renamed into place, so readers
// never observe a partial record set. A file whose counts do not add up to
// p^2 - p is treated as absent.

#include <filesystem>
#include <optional>
#include <string>

#include "eccensus/curves.hpp"

namespace eccensus::census {

inline constexpr const char* kHistogramSchema = "# eccensus shape-histogram v1";

class HistogramStore {
 public:
  explicit HistogramStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::uint64_t p) const;

  std::optional<curves::ShapeHistogram> load(std::uint64_t p) const;
  /// Throws std::runtime_error when the file cannot be written.
  void save(const curves::ShapeHistogram& hist) const;

  static std::string serialize(const curves::ShapeHistogram& hist);
  /// Returns nullopt on any schema, parse or consistency error.
  static std::optional<curves::ShapeHistogram> parse(const std::string& text);

 private:
  std::filesystem::path dir_;
};

}  // namespace eccensus::census
