#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pglind/formulas.hpp"

namespace pglind {

// The basic-character multiplicity of one label by every available route.
struct RouteValues {
  MultiPartition label;
  Subgroup subgroup;
  std::int64_t formula = 0;                // character-sum form
  std::int64_t transition = 0;             // irreducible form pushed through the transition
  std::optional<std::int64_t> involution;  // involution sums (PGO only)

  bool agree() const { return formula == transition && (!involution || *involution == formula); }
};

RouteValues route_values(const MultiPartition& label, Subgroup s);

struct CrossCheckSummary {
  std::uint64_t q = 0;
  int n = 0;
  std::size_t labels_total = 0;
  std::size_t labels_checked = 0;
  std::size_t comparisons = 0;
  std::vector<RouteValues> disagreements;
};

// Checks all three subgroups on the first `label_limit` labels of P-hat
// (0 means every label).
CrossCheckSummary cross_check(const QContext& ctx, int n, std::size_t label_limit = 0);

}  // namespace pglind
