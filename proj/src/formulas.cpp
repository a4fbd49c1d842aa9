#include "pglind/formulas.hpp"

#include "pglind/checked.hpp"
#include "pglind/error.hpp"
#include "pglind/oracle.hpp"
#include "pglind/symchar.hpp"

namespace pglind {

namespace {

void require_P_hat(const MultiPartition& mp, const char* who) {
  if (!in_P_hat(mp))
    throw ArgumentError(std::string(who) + ": label " + to_string(mp) + " has Pi = " + to_string(pi(mp)) +
                        ", not 1");
}

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

std::int64_t from_quarters(std::int64_t quarters, const std::string& what) {
  if (quarters % 4 != 0)
    throw InvariantViolation(what + ": non-integral value " + std::to_string(quarters) + "/4");
  return quarters / 4;
}

std::int64_t nonnegative(std::int64_t v, const std::string& what) {
  if (v < 0) throw InvariantViolation(what + ": negative multiplicity " + std::to_string(v));
  return v;
}

// Weighted character sums sum_{rho |- |nu|} w(rho) chi^rho_nu.
template <typename Weight>
std::int64_t char_sum(const Partition& nu, Weight weight) {
  std::int64_t total = 0;
  for (const Partition& rho : partitions_of(nu.size())) {
    const std::int64_t w = weight(rho);
    if (w == 0) continue;
    total = checked::add(total, checked::mul(w, chi(rho, nu), "character sum"), "character sum");
  }
  return total;
}

std::int64_t sum_transpose_even(const Partition& nu) {
  return char_sum(nu, [](const Partition& rho) -> std::int64_t { return transpose_is_even(rho) ? 1 : 0; });
}

}  // namespace

Subgroup parse_subgroup(std::string_view text) {
  if (text == "pgsp") return Subgroup::PGSp;
  if (text == "pgo+" || text == "pgoplus") return Subgroup::PGOPlus;
  if (text == "pgo-" || text == "pgominus") return Subgroup::PGOMinus;
  throw ArgumentError("unknown subgroup '" + std::string(text) + "' (expected pgsp, pgo+ or pgo-)");
}

std::string to_string(Subgroup s) {
  switch (s) {
    case Subgroup::PGSp: return "pgsp";
    case Subgroup::PGOPlus: return "pgo+";
    case Subgroup::PGOMinus: return "pgo-";
  }
  return "?";
}

int epsilon(Subgroup s) {
  if (s == Subgroup::PGOPlus) return 1;
  if (s == Subgroup::PGOMinus) return -1;
  throw ArgumentError("epsilon: PGSp has no Witt sign");
}

int mult_pgsp_irr(const MultiPartition& rho) {
  require_P_hat(rho, "mult_pgsp_irr");
  for (const auto& e : rho.entries())
    if (!is_even(e.nu)) return 0;
  const auto half = half_norm_product(rho);
  return (half && half->is_identity()) ? 1 : 0;
}

PgoTerms pgo_irr_terms(const MultiPartition& rho, int eps) {
  require_P_hat(rho, "mult_pgo_irr");
  if (eps != 1 && eps != -1) throw ArgumentError("epsilon must be +1 or -1");
  PgoTerms t;

  bool cond1 = true;
  std::int64_t prod1 = 1;
  for (const auto& e : rho.entries()) {
    if (e.orbit.d == 1)
      prod1 = checked::mul(prod1, multiplicity_product(e.nu), "T1");
    else if (!transpose_is_even(e.nu))
      cond1 = false;
  }
  if (cond1) t.t1 = prod1;

  bool all_transpose_even = true;
  for (const auto& e : rho.entries()) all_transpose_even = all_transpose_even && transpose_is_even(e.nu);
  if (all_transpose_even) {
    const auto half = half_norm_product(rho);
    if (half && half->is_identity()) t.t2 = 2 * eps;
  }

  bool cond3 = true;
  std::int64_t prod3 = 1;
  long ell2mod4 = 0;
  for (const auto& e : rho.entries()) {
    if (e.orbit.d == 1 && e.orbit.m % 2 == 1) {
      if (!odd_multiplicities_even(e.nu)) {
        cond3 = false;
        break;
      }
      prod3 = checked::mul(prod3, even_multiplicity_product(e.nu), "T3");
      ell2mod4 += length_stats(e.nu).ell2mod4;
    } else if (e.orbit.d == 1) {
      prod3 = checked::mul(prod3, multiplicity_product(e.nu), "T3");
    } else if (!transpose_is_even(e.nu)) {
      cond3 = false;
      break;
    }
  }
  if (cond3) {
    const int sign = parity_sign(rho.n() / 2) * phi(rho.ctx(), rho) * parity_sign(ell2mod4);
    t.t3 = sign * prod3;
  }
  return t;
}

std::int64_t mult_pgo_irr(const MultiPartition& rho, int eps) {
  const PgoTerms t = pgo_irr_terms(rho, eps);
  const std::string what = "mult_pgo_irr(" + to_string(rho) + ")";
  return nonnegative(from_quarters(t.total_quarters(), what), what);
}

std::int64_t mult_irr(const MultiPartition& rho, Subgroup s) {
  if (s == Subgroup::PGSp) return mult_pgsp_irr(rho);
  return mult_pgo_irr(rho, epsilon(s));
}

int mult_unipotent_pgsp(const Partition& rho) {
  if (rho.size() % 2 != 0) throw ArgumentError("unipotent label must have even size");
  return is_even(rho) ? 1 : 0;
}

std::int64_t mult_unipotent_gl_o(const Partition& rho, int eps) {
  if (rho.size() % 2 != 0) throw ArgumentError("unipotent label must have even size");
  const std::int64_t halves = multiplicity_product(rho) + (transpose_is_even(rho) ? eps : 0);
  if (halves % 2 != 0) throw InvariantViolation("mult_unipotent_gl_o: non-integral value for " + to_string(rho));
  return nonnegative(halves / 2, "mult_unipotent_gl_o");
}

std::int64_t mult_unipotent_pgo(const Partition& rho, int eps) {
  if (rho.size() % 2 != 0) throw ArgumentError("unipotent label must have even size");
  std::int64_t quarters = multiplicity_product(rho);
  if (transpose_is_even(rho)) quarters += 2 * eps;
  if (odd_multiplicities_even(rho))
    quarters += parity_sign(length_stats(rho).ell1 / 2) * even_multiplicity_product(rho);
  const std::string what = "mult_unipotent_pgo(" + to_string(rho) + ")";
  return nonnegative(from_quarters(quarters, what), what);
}

std::int64_t mult_unipotent(const Partition& rho, Subgroup s) {
  if (s == Subgroup::PGSp) return mult_unipotent_pgsp(rho);
  return mult_unipotent_pgo(rho, epsilon(s));
}

std::int64_t mult_unipotent_omega(const Partition& rho, Subgroup s) {
  std::int64_t v = 0;
  if (s == Subgroup::PGSp)
    v = (is_even(rho) ? 1 : 0) - mult_unipotent_pgsp(rho);
  else
    v = mult_unipotent_gl_o(rho, epsilon(s)) - mult_unipotent_pgo(rho, epsilon(s));
  return nonnegative(v, "mult_unipotent_omega(" + to_string(rho) + ")");
}

std::int64_t mult_pgsp_basic(const MultiPartition& nu) {
  require_P_hat(nu, "mult_pgsp_basic");
  const auto half = half_norm_product(nu);
  if (!half || !half->is_identity()) return 0;
  std::int64_t prod = 1;
  for (const auto& e : nu.entries()) {
    const std::int64_t s =
        char_sum(e.nu, [](const Partition& rho) -> std::int64_t { return is_even(rho) ? 1 : 0; });
    prod = checked::mul(prod, s, "mult_pgsp_basic");
  }
  return prod;
}

std::int64_t mult_pgo_basic(const MultiPartition& nu, int eps) {
  require_P_hat(nu, "mult_pgo_basic");
  if (eps != 1 && eps != -1) throw ArgumentError("epsilon must be +1 or -1");

  std::int64_t a = 1;
  for (const auto& e : nu.entries()) {
    std::int64_t f;
    if (e.orbit.d == 1)
      f = parity_sign(e.nu.size()) * char_sum(e.nu, [](const Partition& r) { return multiplicity_product(r); });
    else
      f = sum_transpose_even(e.nu);
    a = checked::mul(a, f, "mult_pgo_basic");
  }

  std::int64_t b = 0;
  const auto half = half_norm_product(nu);
  if (half && half->is_identity()) {
    b = 2 * eps;
    for (const auto& e : nu.entries()) b = checked::mul(b, sum_transpose_even(e.nu), "mult_pgo_basic");
  }

  std::int64_t c = 1;
  for (const auto& e : nu.entries()) {
    const long mnu = static_cast<long>(e.orbit.m) * e.nu.size();
    std::int64_t f;
    if (e.orbit.d == 1 && e.orbit.m % 2 == 1) {
      f = char_sum(e.nu, [](const Partition& r) -> std::int64_t {
        if (!odd_multiplicities_even(r)) return 0;
        return parity_sign(r.size() / 2 + length_stats(r).ell2mod4) * even_multiplicity_product(r);
      });
    } else if (e.orbit.d == 1) {
      f = parity_sign(e.nu.size() + mnu / 2) *
          char_sum(e.nu, [](const Partition& r) { return multiplicity_product(r); });
    } else {
      if (mnu % 2 != 0) {
        f = 0;
      } else {
        f = parity_sign(mnu / 2) * sum_transpose_even(e.nu);
      }
    }
    c = checked::mul(c, f, "mult_pgo_basic");
    if (c == 0) break;
  }
  if (c != 0) c *= phi(nu.ctx(), nu);

  const std::string what = "mult_pgo_basic(" + to_string(nu) + ")";
  return from_quarters(checked::add(checked::add(a, b, what.c_str()), c, what.c_str()), what);
}

std::int64_t mult_basic(const MultiPartition& nu, Subgroup s) {
  if (s == Subgroup::PGSp) return mult_pgsp_basic(nu);
  return mult_pgo_basic(nu, epsilon(s));
}

std::int64_t mult_basic_via_transition(const MultiPartition& nu, Subgroup s) {
  require_P_hat(nu, "mult_basic_via_transition");
  const auto& entries = nu.entries();
  std::vector<const std::vector<Partition>*> choices;
  long total_size = 0;
  for (const auto& e : entries) {
    choices.push_back(&partitions_of(e.nu.size()));
    total_size += e.nu.size();
  }

  std::int64_t total = 0;
  std::vector<std::size_t> idx(entries.size(), 0);
  std::vector<Partition> parts(entries.size());
  while (true) {
    std::int64_t coeff = 1;
    for (std::size_t i = 0; i < entries.size() && coeff != 0; ++i) {
      parts[i] = (*choices[i])[idx[i]];
      coeff = checked::mul(coeff, chi(parts[i], entries[i].nu), "transition coefficient");
    }
    if (coeff != 0) {
      // Pi depends only on block sizes, so every rho here is in P-hat too.
      const std::int64_t m = mult_irr(nu.with_partitions(parts), s);
      total = checked::add(total, checked::mul(coeff, m, "transition"), "transition");
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k]->size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return parity_sign(nu.n() + total_size) * total;
}

DecompositionReport decompose(const QContext& ctx, int n, Subgroup s, const DecomposeOptions& opts) {
  if (n < 2 || n % 2 != 0) throw ArgumentError("n must be even and >= 2, got " + std::to_string(n));
  DecompositionReport report{s, ctx, n, {}, std::nullopt, 0};
  if (opts.with_degrees) report.sum_mult_times_degree = BigInt(0);

  auto add_row = [&](const MultiPartition& label, std::int64_t mult) {
    if (mult == 0 && !opts.include_zeros) return;
    ReportRow row{label, mult, std::nullopt};
    if (opts.with_degrees) {
      row.degree = degree(label);
      *report.sum_mult_times_degree += BigInt(mult) * *row.degree;
    }
    report.sum_mult_squared += BigInt(mult) * mult;
    report.rows.push_back(std::move(row));
  };

  if (opts.unipotent_only) {
    for (const Partition& rho : partitions_of(n))
      add_row(MultiPartition(ctx, n, {{DualElem{}, rho}}), mult_unipotent(rho, s));
    return report;
  }
  for (const MultiPartition& label : enumerate_labels(ctx, n, true, opts.max_labels))
    add_row(label, mult_irr(label, s));
  return report;
}

}  // namespace pglind
