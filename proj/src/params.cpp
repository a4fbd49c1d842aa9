#include "pglind/params.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pglind/error.hpp"

namespace pglind {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool entry_less(const LabelEntry& a, const LabelEntry& b) {
  if (a.orbit.rep != b.orbit.rep) return a.orbit.rep < b.orbit.rep;
  return reverse_lex_less(a.nu, b.nu);
}

}  // namespace

MultiPartition::MultiPartition(QContext ctx, int n, const std::vector<std::pair<DualElem, Partition>>& entries)
    : ctx_(ctx), n_(n) {
  entries_.reserve(entries.size());
  for (const auto& [xi, nu] : entries) entries_.push_back(LabelEntry{orbit_data(ctx_, xi), nu});
  std::sort(entries_.begin(), entries_.end(),
            [](const LabelEntry& a, const LabelEntry& b) { return a.orbit.rep < b.orbit.rep; });
  check();
}

MultiPartition::MultiPartition(QContext ctx, int n, std::vector<LabelEntry> entries)
    : ctx_(ctx), n_(n), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LabelEntry& a, const LabelEntry& b) { return a.orbit.rep < b.orbit.rep; });
  check();
}

void MultiPartition::check() {
  if (n_ < 2 || n_ % 2 != 0) throw ArgumentError("label weight n must be even and >= 2, got " + std::to_string(n_));
  long weight = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.nu.empty()) throw ArgumentError("label entry for " + to_string(e.orbit.rep) + " has an empty partition");
    if (i > 0 && entries_[i - 1].orbit.rep == e.orbit.rep)
      throw ArgumentError("label has two entries for the orbit of " + to_string(e.orbit.rep));
    weight += static_cast<long>(e.orbit.m) * e.nu.size();
  }
  if (weight != n_)
    throw ArgumentError("label weight sum m_xi |nu_xi| = " + std::to_string(weight) + " differs from n = " +
                        std::to_string(n_));
}

MultiPartition MultiPartition::with_partitions(const std::vector<Partition>& parts) const {
  if (parts.size() != entries_.size()) throw ArgumentError("with_partitions: wrong number of partitions");
  std::vector<LabelEntry> out = entries_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (parts[i].size() != out[i].nu.size()) throw ArgumentError("with_partitions: block size changed");
    out[i].nu = parts[i];
  }
  return MultiPartition(ctx_, n_, std::move(out));
}

bool label_less(const MultiPartition& a, const MultiPartition& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end(), entry_less);
}

DualElem pi(const MultiPartition& mp) {
  DualElem total;
  for (const auto& e : mp.entries()) total = total + scale(e.nu.size(), e.orbit.norm);
  return total;
}

bool in_P_hat(const MultiPartition& mp) { return pi(mp).is_identity(); }

std::optional<DualElem> half_norm_product(const MultiPartition& mp) {
  if (!in_P_hat(mp)) throw ArgumentError("half_norm_product: requires Pi = 1 for " + to_string(mp));
  DualElem total;
  for (const auto& e : mp.entries()) {
    if (e.nu.size() % 2 != 0) return std::nullopt;
    total = total + scale(e.nu.size() / 2, e.orbit.norm);
  }
  if (!total.is_identity() && total != DualElem(1, 2))
    throw InvariantViolation("half_norm_product: " + to_string(total) + " is not a square root of 1");
  return total;
}

std::vector<MultiPartition> enumerate_labels(const QContext& ctx, int n, bool restrict_to_P_hat,
                                             std::size_t max_labels) {
  if (n < 2 || n % 2 != 0) throw ArgumentError("enumerate_labels: n must be even and >= 2");
  return enumerate_labels(ctx, n, restrict_to_P_hat, orbits_up_to(ctx, static_cast<unsigned>(n)), max_labels);
}

std::vector<MultiPartition> enumerate_labels(const QContext& ctx, int n, bool restrict_to_P_hat,
                                             const std::vector<OrbitData>& orbits, std::size_t max_labels) {
  if (n < 2 || n % 2 != 0) throw ArgumentError("enumerate_labels: n must be even and >= 2");
  // Orbit indices bucketed by orbit size, each bucket ascending.
  std::map<unsigned, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].m <= static_cast<unsigned>(n)) by_size[orbits[i].m].push_back(i);

  std::vector<MultiPartition> out;
  std::vector<LabelEntry> current;

  // Entries are added with strictly increasing orbit index, so each label is
  // produced exactly once.
  auto recurse = [&](auto&& self, std::size_t start, int remaining, const DualElem& acc) -> void {
    if (remaining == 0) {
      if (restrict_to_P_hat && !acc.is_identity()) return;
      if (out.size() >= max_labels)
        throw CapacityError("enumerate_labels: more than " + std::to_string(max_labels) + " labels for q = " +
                            std::to_string(ctx.q()) + ", n = " + std::to_string(n));
      out.emplace_back(ctx, n, current);
      return;
    }
    for (const auto& [m, indices] : by_size) {
      if (static_cast<int>(m) > remaining) break;
      for (auto it = std::lower_bound(indices.begin(), indices.end(), start); it != indices.end(); ++it) {
        const OrbitData& orbit = orbits[*it];
        for (int s = 1; s * static_cast<int>(m) <= remaining; ++s) {
          const DualElem next = acc + scale(s, orbit.norm);
          for (const Partition& nu : partitions_of(s)) {
            current.push_back(LabelEntry{orbit, nu});
            self(self, *it + 1, remaining - s * static_cast<int>(m), next);
            current.pop_back();
          }
        }
      }
    }
  };
  recurse(recurse, 0, n, DualElem{});
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

MultiPartition parse_label(const QContext& ctx, int n, std::string_view text) {
  std::vector<std::pair<DualElem, Partition>> entries;
  std::string_view rest = text;
  while (true) {
    const auto plus = rest.find('+');
    const std::string_view piece = trim(rest.substr(0, plus));
    if (piece.empty()) throw ArgumentError("empty entry in label '" + std::string(text) + "'");
    const auto colon = piece.find(':');
    if (colon == std::string_view::npos)
      throw ArgumentError("label entry must look like a/b:[parts], got '" + std::string(piece) + "'");
    const DualElem xi = parse_dual_elem(trim(piece.substr(0, colon)));
    validate(ctx, xi);
    entries.emplace_back(xi, parse_partition(piece.substr(colon + 1)));
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  std::vector<std::pair<DualElem, Partition>> canonical;
  for (auto& [xi, nu] : entries) {
    const DualElem rep = canonical_rep(ctx, xi);
    for (const auto& [seen, unused] : canonical)
      if (seen == rep)
        throw ArgumentError("label lists the orbit of " + to_string(rep) + " more than once");
    canonical.emplace_back(rep, nu);
  }
  return MultiPartition(ctx, n, canonical);
}

std::string to_string(const MultiPartition& mp) {
  std::string s;
  for (const auto& e : mp.entries()) {
    if (!s.empty()) s += " + ";
    s += to_string(e.orbit.rep) + ":" + to_string(e.nu);
  }
  return s;
}

MultiPartition inverse_label(const MultiPartition& mp) {
  std::vector<std::pair<DualElem, Partition>> entries;
  for (const auto& e : mp.entries()) entries.emplace_back(-e.orbit.rep, e.nu);
  return MultiPartition(mp.ctx(), mp.n(), entries);
}

nlohmann::json to_json(const MultiPartition& mp) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : mp.entries())
    entries.push_back({{"xi", to_string(e.orbit.rep)}, {"partition", e.nu.parts()}});
  return {{"entries", entries}, {"n", mp.n()}, {"q", mp.ctx().q()}};
}

MultiPartition label_from_json(const nlohmann::json& j) {
  try {
    const QContext ctx(j.at("q").get<std::uint64_t>());
    std::vector<std::pair<DualElem, Partition>> entries;
    for (const auto& e : j.at("entries")) {
      const DualElem xi = parse_dual_elem(e.at("xi").get<std::string>());
      validate(ctx, xi);
      entries.emplace_back(canonical_rep(ctx, xi), Partition(e.at("partition").get<std::vector<int>>()));
    }
    return MultiPartition(ctx, j.at("n").get<int>(), entries);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("malformed label JSON: " + std::string(e.what()));
  }
}

}  // namespace pglind
