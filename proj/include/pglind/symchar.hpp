#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "pglind/partition.hpp"

namespace pglind {

// chi^rho evaluated at cycle type mu, with chi^{(m)} the trivial character.
struct CharacterQuery {
  Partition rho;
  Partition mu;
};

// Full character table of S_m. Rows are indexed by rho, columns by mu, both
// in partitions_of(m) order (reverse lexicographic).
struct CharacterTable {
  int m = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<std::int64_t>> values;

  std::int64_t at(std::size_t row, std::size_t col) const { return values[row][col]; }
};

inline constexpr int kDefaultCharacterTableBound = 14;
inline constexpr int kCharacterCacheFormatVersion = 1;

// Memoized Murnaghan-Nakayama evaluation. Internally synchronized, so one
// instance can be shared between threads.
class CharacterCache {
public:
  std::int64_t chi(const Partition& rho, const Partition& mu);
  std::int64_t chi(const CharacterQuery& q) { return chi(q.rho, q.mu); }

  CharacterTable table(int m, int bound = kDefaultCharacterTableBound);

  // Persist full tables for every size evaluated so far.
  void save(const std::filesystem::path& path);
  // Seeds the memo from a cache file. Throws ArgumentError on a version
  // mismatch or a malformed file.
  void load(const std::filesystem::path& path);

  std::size_t memo_size() const;
  void clear();

  static CharacterCache& global();

private:
  std::int64_t evaluate(const Partition& rho, const Partition& mu);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, std::int64_t> memo_;
  std::set<int> sizes_seen_;
};

// Shorthands through the process-wide cache.
std::int64_t chi(const Partition& rho, const Partition& mu);
CharacterTable character_table(int m, int bound = kDefaultCharacterTableBound);

}  // namespace pglind
