#include "pglind/crosscheck.hpp"

#include "pglind/involutions.hpp"

namespace pglind {

RouteValues route_values(const MultiPartition& label, Subgroup s) {
  RouteValues v{label, s, mult_basic(label, s), mult_basic_via_transition(label, s), std::nullopt};
  if (s != Subgroup::PGSp) v.involution = threeterm_bruteforce(label, epsilon(s));
  return v;
}

CrossCheckSummary cross_check(const QContext& ctx, int n, std::size_t label_limit) {
  CrossCheckSummary summary;
  summary.q = ctx.q();
  summary.n = n;
  const auto labels = enumerate_labels(ctx, n, true);
  summary.labels_total = labels.size();
  for (const auto& label : labels) {
    if (label_limit != 0 && summary.labels_checked >= label_limit) break;
    ++summary.labels_checked;
    for (Subgroup s : kAllSubgroups) {
      RouteValues v = route_values(label, s);
      ++summary.comparisons;
      if (!v.agree()) summary.disagreements.push_back(std::move(v));
    }
  }
  return summary;
}

}  // namespace pglind
