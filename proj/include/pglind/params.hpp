#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pglind/dualgroup.hpp"
#include "pglind/partition.hpp"

namespace pglind {

struct LabelEntry {
  OrbitData orbit;  // keyed by orbit.rep
  Partition nu;     // nonempty

  friend bool operator==(const LabelEntry& a, const LabelEntry& b) {
    return a.orbit.rep == b.orbit.rep && a.nu == b.nu;
  }
};

// A sigma-stable collection of partitions indexed by sigma-orbits of L, stored
// as one partition per canonical orbit representative, with
// sum m_xi |nu_xi| = n (n even). Entries are kept sorted by representative.
// Serves both as an irreducible label and as a basic-character label.
class MultiPartition {
public:
  // Keys are canonicalized; throws ArgumentError on an empty partition, a
  // duplicate orbit, an odd n, or a weight mismatch.
  MultiPartition(QContext ctx, int n, const std::vector<std::pair<DualElem, Partition>>& entries);
  MultiPartition(QContext ctx, int n, std::vector<LabelEntry> entries);

  const QContext& ctx() const { return ctx_; }
  int n() const { return n_; }
  const std::vector<LabelEntry>& entries() const { return entries_; }

  // Same orbits, new partitions of the same sizes (in entry order).
  MultiPartition with_partitions(const std::vector<Partition>& parts) const;

  bool is_unipotent() const { return entries_.size() == 1 && entries_[0].orbit.rep.is_identity(); }

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  void check();

  QContext ctx_;
  int n_;
  std::vector<LabelEntry> entries_;
};

// Enumeration order: entries compared by orbit representative, then partition
// in reverse lexicographic order; labels compared lexicographically by entry.
bool label_less(const MultiPartition& a, const MultiPartition& b);

// Pi(mp) = sum_xi |nu_xi| N(xi) in Q/Z.
DualElem pi(const MultiPartition& mp);

// True iff Pi(mp) is the identity, i.e. the label descends to PGL_n.
bool in_P_hat(const MultiPartition& mp);

// sum_xi (|nu_xi|/2) N(xi) when every |nu_xi| is even: 0/1 or 1/2.
// std::nullopt when some block has odd size. Requires in_P_hat(mp).
std::optional<DualElem> half_norm_product(const MultiPartition& mp);

inline constexpr std::size_t kDefaultMaxLabels = 5'000'000;

// Every label of weight n (restricted to Pi = 1 when asked), in label_less
// order. Throws CapacityError past max_labels.
std::vector<MultiPartition> enumerate_labels(const QContext& ctx, int n, bool restrict_to_P_hat,
                                             std::size_t max_labels = kDefaultMaxLabels);

// Same, reusing a precomputed orbit list (orbits_up_to(ctx, n)).
std::vector<MultiPartition> enumerate_labels(const QContext& ctx, int n, bool restrict_to_P_hat,
                                             const std::vector<OrbitData>& orbits,
                                             std::size_t max_labels = kDefaultMaxLabels);

// Grammar: entry ('+' entry)*, entry = a/b ':' [parts]. Whitespace is ignored.
// Example: "0/1:[2,1] + 1/2:[1]".
MultiPartition parse_label(const QContext& ctx, int n, std::string_view text);

std::string to_string(const MultiPartition& mp);

// Applies xi -> xi^{-1} to every key.
MultiPartition inverse_label(const MultiPartition& mp);

// {"entries": [{"xi": "a/b", "partition": [..]}], "n": n, "q": q}
nlohmann::json to_json(const MultiPartition& mp);
MultiPartition label_from_json(const nlohmann::json& j);

}  // namespace pglind
