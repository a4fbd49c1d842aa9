#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pglind/params.hpp"

namespace pglind {

using BigInt = boost::multiprecision::cpp_int;

enum class Subgroup { PGSp, PGOPlus, PGOMinus };

// Accepts "pgsp", "pgo+", "pgo-" (also "pgoplus", "pgominus").
Subgroup parse_subgroup(std::string_view text);
std::string to_string(Subgroup s);
// +1 for PGO+, -1 for PGO-; ArgumentError for PGSp.
int epsilon(Subgroup s);
inline constexpr Subgroup kAllSubgroups[] = {Subgroup::PGSp, Subgroup::PGOPlus, Subgroup::PGOMinus};

// The three summands of the PGO irreducible-form multiplicity, each scaled by 4.
struct PgoTerms {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::int64_t t3 = 0;
  std::int64_t total_quarters() const { return t1 + t2 + t3; }
};

// Multiplicity of the irreducible chi^rho in Ind(1); rho must satisfy Pi = 1.
int mult_pgsp_irr(const MultiPartition& rho);
PgoTerms pgo_irr_terms(const MultiPartition& rho, int eps);
std::int64_t mult_pgo_irr(const MultiPartition& rho, int eps);
std::int64_t mult_irr(const MultiPartition& rho, Subgroup s);

// Unipotent closed forms, rho a partition of an even n.
int mult_unipotent_pgsp(const Partition& rho);
std::int64_t mult_unipotent_gl_o(const Partition& rho, int eps);
std::int64_t mult_unipotent_pgo(const Partition& rho, int eps);
std::int64_t mult_unipotent_omega(const Partition& rho, Subgroup s);
std::int64_t mult_unipotent(const Partition& rho, Subgroup s);

// Multiplicity of the basic character B_nu in Ind(1), from the character-sum
// formulas; nu must satisfy Pi = 1.
std::int64_t mult_pgsp_basic(const MultiPartition& nu);
std::int64_t mult_pgo_basic(const MultiPartition& nu, int eps);
std::int64_t mult_basic(const MultiPartition& nu, Subgroup s);

// Same quantity by expanding B_nu over irreducibles with symmetric-group
// character values and summing irreducible multiplicities.
std::int64_t mult_basic_via_transition(const MultiPartition& nu, Subgroup s);

struct DecomposeOptions {
  bool include_zeros = false;
  bool with_degrees = false;
  bool unipotent_only = false;
  std::size_t max_labels = kDefaultMaxLabels;
};

struct ReportRow {
  MultiPartition label;
  std::int64_t mult = 0;
  std::optional<BigInt> degree;
};

struct DecompositionReport {
  Subgroup subgroup;
  QContext ctx;
  int n;
  std::vector<ReportRow> rows;
  std::optional<BigInt> sum_mult_times_degree;  // set when degrees are on
  BigInt sum_mult_squared;
};

DecompositionReport decompose(const QContext& ctx, int n, Subgroup s, const DecomposeOptions& opts = {});

}  // namespace pglind
