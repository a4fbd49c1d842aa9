#include "pglind/symchar.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "pglind/error.hpp"

namespace pglind {

namespace {

// Beta-set of rho with exactly rho.length() beads: beta_i = rho_i + (L-1-i).
std::vector<int> beta_set(const Partition& rho) {
  const int len = rho.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = rho[i] + (len - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>{});
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition drop_first(const Partition& mu) {
  return Partition(std::vector<int>(mu.begin() + 1, mu.end()));
}

}  // namespace

std::int64_t CharacterCache::chi(const Partition& rho, const Partition& mu) {
  if (rho.size() != mu.size())
    throw ArgumentError("chi: |rho| = " + std::to_string(rho.size()) +
                        " differs from |mu| = " + std::to_string(mu.size()));
  return evaluate(rho, mu);
}

std::int64_t CharacterCache::evaluate(const Partition& rho, const Partition& mu) {
  if (mu.empty()) return 1;
  if (mu.length() == 1 && rho.length() == 1) return 1;
  auto key = std::make_pair(rho, mu);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // Remove a rim hook of length mu_1 in every possible way; on the abacus
  // that is sliding one bead down by mu_1 onto an empty position.
  const int k = mu[0];
  const Partition rest = drop_first(mu);
  const std::vector<int> beta = beta_set(rho);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    const std::int64_t value = evaluate(from_beta_set(std::move(moved)), rest);
    total += (between % 2 == 0) ? value : -value;
  }

  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), total);
  sizes_seen_.insert(rho.size());
  return total;
}

CharacterTable CharacterCache::table(int m, int bound) {
  if (m > bound)
    throw CapacityError("character_table: m = " + std::to_string(m) + " exceeds bound " +
                        std::to_string(bound));
  CharacterTable t;
  t.m = m;
  t.partitions = partitions_of(m);
  t.values.assign(t.partitions.size(), std::vector<std::int64_t>(t.partitions.size()));
  for (std::size_t r = 0; r < t.partitions.size(); ++r)
    for (std::size_t c = 0; c < t.partitions.size(); ++c)
      t.values[r][c] = chi(t.partitions[r], t.partitions[c]);
  {
    std::unique_lock lock(mutex_);
    sizes_seen_.insert(m);
  }
  return t;
}

void CharacterCache::save(const std::filesystem::path& path) {
  std::set<int> sizes;
  {
    std::shared_lock lock(mutex_);
    sizes = sizes_seen_;
  }
  nlohmann::json doc;
  doc["format_version"] = kCharacterCacheFormatVersion;
  doc["order"] = "reverse-lexicographic; rows rho, columns mu";
  doc["tables"] = nlohmann::json::object();
  for (int m : sizes) {
    if (m > kDefaultCharacterTableBound) continue;
    const CharacterTable t = table(m);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : t.partitions) parts.push_back(p.parts());
    doc["tables"][std::to_string(m)] = {{"partitions", parts}, {"values", t.values}};
  }
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write character cache " + path.string());
  out << doc.dump(1) << '\n';
}

void CharacterCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read character cache " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("character cache is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.contains("format_version") || doc["format_version"] != kCharacterCacheFormatVersion)
    throw ArgumentError("character cache format version mismatch (expected " +
                        std::to_string(kCharacterCacheFormatVersion) + ")");
  if (!doc.contains("tables") || !doc["tables"].is_object())
    throw ArgumentError("character cache has no 'tables' object");

  std::map<std::pair<Partition, Partition>, std::int64_t> staged;
  std::set<int> sizes;
  try {
    for (const auto& [key, entry] : doc["tables"].items()) {
      const int m = std::stoi(key);
      const auto& expected = partitions_of(m, kDefaultCharacterTableBound);
      const auto& parts = entry.at("partitions");
      const auto& values = entry.at("values");
      if (parts.size() != expected.size() || values.size() != expected.size())
        throw ArgumentError("character cache table " + key + " has wrong dimensions");
      for (std::size_t r = 0; r < expected.size(); ++r) {
        if (Partition(parts[r].get<std::vector<int>>()) != expected[r])
          throw ArgumentError("character cache table " + key + " is not in documented order");
        if (values[r].size() != expected.size())
          throw ArgumentError("character cache table " + key + " has a ragged row");
        for (std::size_t c = 0; c < expected.size(); ++c)
          staged[{expected[r], expected[c]}] = values[r][c].get<std::int64_t>();
      }
      sizes.insert(m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("malformed character cache: " + std::string(e.what()));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ArgumentError("malformed character cache: " + std::string(e.what()));
  }

  std::unique_lock lock(mutex_);
  for (auto& [k, v] : staged) memo_.insert_or_assign(k, v);
  sizes_seen_.insert(sizes.begin(), sizes.end());
}

std::size_t CharacterCache::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void CharacterCache::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
  sizes_seen_.clear();
}

CharacterCache& CharacterCache::global() {
  static CharacterCache instance;
  return instance;
}

std::int64_t chi(const Partition& rho, const Partition& mu) {
  return CharacterCache::global().chi(rho, mu);
}

CharacterTable character_table(int m, int bound) { return CharacterCache::global().table(m, bound); }

}  // namespace pglind
