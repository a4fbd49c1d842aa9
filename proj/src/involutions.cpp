#include "pglind/involutions.hpp"

#include <algorithm>
#include <numeric>

#include "pglind/checked.hpp"
#include "pglind/error.hpp"
#include "pglind/symchar.hpp"

namespace pglind {

namespace {

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

std::int64_t pow_minus_two(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked::mul(r, -2, "(-2)^ell1");
  return r;
}

void all_involutions(int m, std::vector<int>& perm, int next, std::vector<std::vector<int>>& out) {
  while (next < m && perm[next] != -1) ++next;
  if (next == m) {
    out.push_back(perm);
    return;
  }
  perm[next] = next;
  all_involutions(m, perm, next + 1, out);
  for (int j = next + 1; j < m; ++j) {
    if (perm[j] != -1) continue;
    perm[next] = j;
    perm[j] = next;
    all_involutions(m, perm, next + 1, out);
    perm[j] = -1;
  }
  perm[next] = -1;
}

template <typename Weight>
std::int64_t char_sum(const Partition& nu, Weight weight) {
  std::int64_t total = 0;
  for (const Partition& rho : partitions_of(nu.size())) {
    const std::int64_t w = weight(rho);
    if (w != 0) total = checked::add(total, checked::mul(w, chi(rho, nu)));
  }
  return total;
}

IdentityCheckResult make_result(const char* name, const Partition& nu, std::int64_t lhs, std::int64_t rhs) {
  return IdentityCheckResult{name, nu, lhs, rhs, lhs == rhs};
}

}  // namespace

std::vector<int> base_permutation(const Partition& nu, bool alternate) {
  std::vector<int> parts = nu.parts();
  if (alternate) std::reverse(parts.begin(), parts.end());
  std::vector<int> w(nu.size());
  int start = 0;
  for (int l : parts) {
    for (int i = 0; i < l; ++i) {
      const int step = alternate ? l - 1 : 1;
      w[start + i] = start + (i + step) % l;
    }
    start += l;
  }
  return w;
}

std::vector<CentralizerInvolution> enumerate_Zinv(const Partition& nu, int bound) {
  return enumerate_Zinv(nu, base_permutation(nu), bound);
}

std::vector<CentralizerInvolution> enumerate_Zinv(const Partition& nu, const std::vector<int>& base, int bound) {
  const int m = nu.size();
  if (m > bound)
    throw CapacityError("enumerate_Zinv: |nu| = " + std::to_string(m) + " exceeds bound " + std::to_string(bound));
  if (static_cast<int>(base.size()) != m) throw ArgumentError("enumerate_Zinv: base permutation has wrong size");

  // Cycles of the base permutation: id of each point, first point and length.
  std::vector<int> cycle_of(m, -1), cycle_start, cycle_len;
  for (int s = 0; s < m; ++s) {
    if (cycle_of[s] != -1) continue;
    const int id = static_cast<int>(cycle_start.size());
    int len = 0;
    for (int x = s; cycle_of[x] == -1; x = base[x]) {
      cycle_of[x] = id;
      ++len;
    }
    cycle_start.push_back(s);
    cycle_len.push_back(len);
  }
  std::vector<int> cycle_type = cycle_len;
  std::sort(cycle_type.begin(), cycle_type.end(), std::greater<>{});
  if (Partition(cycle_type) != nu) throw ArgumentError("enumerate_Zinv: base permutation is not of cycle type nu");

  std::vector<std::vector<int>> candidates;
  std::vector<int> scratch(m, -1);
  all_involutions(m, scratch, 0, candidates);

  std::vector<CentralizerInvolution> out;
  for (auto& z : candidates) {
    bool commutes = true;
    for (int x = 0; x < m && commutes; ++x) commutes = z[base[x]] == base[z[x]];
    if (!commutes) continue;

    CentralizerInvolution w{nu, z, {}, {}, {}};
    for (std::size_t c = 0; c < cycle_start.size(); ++c) {
      const int s = cycle_start[c];
      const int l = cycle_len[c];
      const int target = cycle_of[z[s]];
      if (target != static_cast<int>(c)) {
        if (target > static_cast<int>(c)) w.type3_pairs.push_back(l);
        continue;
      }
      // On its own cycle z is a power base^k; z^2 = 1 forces k = 0 or l/2.
      int k = 0;
      for (int x = s; x != z[s]; x = base[x]) ++k;
      if (k == 0)
        w.type1_cycles.push_back(l);
      else if (2 * k == l)
        w.type2_cycles.push_back(l);
      else
        throw InvariantViolation("enumerate_Zinv: involution acts on a cycle by a shift of " + std::to_string(k));
    }
    for (auto* v : {&w.type1_cycles, &w.type2_cycles, &w.type3_pairs})
      std::sort(v->begin(), v->end(), std::greater<>{});

    std::vector<int> lengths = w.type1_cycles;
    lengths.insert(lengths.end(), w.type2_cycles.begin(), w.type2_cycles.end());
    for (int l : w.type3_pairs) lengths.insert(lengths.end(), {l, l});
    std::sort(lengths.begin(), lengths.end(), std::greater<>{});
    if (Partition(lengths) != nu) throw InvariantViolation("enumerate_Zinv: cycle lengths do not rebuild nu");
    out.push_back(std::move(w));
  }
  return out;
}

InvolutionStats stats(const CentralizerInvolution& w) {
  InvolutionStats s;
  for (int l : w.type1_cycles) {
    ++s.ell1;
    if (l % 2 == 1) ++s.ell1_odd;
    if (l % 4 == 2) ++s.ell1_2mod4;
  }
  s.ff = s.ell1 == 0;
  return s;
}

IdentityCheckResult identity_ff_count(const Partition& nu, int bound) {
  std::int64_t lhs = 0;
  for (const auto& w : enumerate_Zinv(nu, bound))
    if (stats(w).ff) ++lhs;
  const std::int64_t rhs = char_sum(nu, [](const Partition& r) -> std::int64_t { return is_even(r) ? 1 : 0; });
  return make_result("ff-count", nu, lhs, rhs);
}

IdentityCheckResult identity_weighted_all(const Partition& nu, int bound) {
  std::int64_t lhs = 0;
  for (const auto& w : enumerate_Zinv(nu, bound)) lhs += pow_minus_two(stats(w).ell1);
  const std::int64_t rhs =
      parity_sign(nu.size()) * char_sum(nu, [](const Partition& r) { return multiplicity_product(r); });
  return make_result("weighted-all", nu, lhs, rhs);
}

IdentityCheckResult identity_odd_free(const Partition& nu, int bound) {
  std::int64_t lhs = 0;
  for (const auto& w : enumerate_Zinv(nu, bound)) {
    const InvolutionStats s = stats(w);
    if (s.ell1_odd == 0) lhs += pow_minus_two(s.ell1);
  }
  const std::int64_t rhs =
      char_sum(nu, [](const Partition& r) -> std::int64_t { return transpose_is_even(r) ? 1 : 0; });
  return make_result("odd-free", nu, lhs, rhs);
}

IdentityCheckResult identity_signed_odd_free(const Partition& nu, int bound) {
  std::int64_t lhs = 0;
  for (const auto& w : enumerate_Zinv(nu, bound)) {
    const InvolutionStats s = stats(w);
    if (s.ell1_odd == 0) lhs += parity_sign(s.ell1_2mod4) * pow_minus_two(s.ell1);
  }
  const std::int64_t rhs = char_sum(nu, [](const Partition& r) -> std::int64_t {
    if (!odd_multiplicities_even(r)) return 0;
    return parity_sign(r.size() / 2 + length_stats(r).ell2mod4) * even_multiplicity_product(r);
  });
  return make_result("signed-odd-free", nu, lhs, rhs);
}

std::vector<IdentityCheckResult> verify_identities(int max_size, int bound) {
  if (max_size > bound)
    throw CapacityError("verify_identities: max size " + std::to_string(max_size) + " exceeds bound " +
                        std::to_string(bound));
  std::vector<IdentityCheckResult> out;
  for (int m = 1; m <= max_size; ++m) {
    for (const Partition& nu : partitions_of(m)) {
      out.push_back(identity_ff_count(nu, bound));
      out.push_back(identity_weighted_all(nu, bound));
      out.push_back(identity_odd_free(nu, bound));
      out.push_back(identity_signed_odd_free(nu, bound));
    }
  }
  return out;
}

int epsilon_nu(const MultiPartition& mp) {
  long odd = 0;
  for (const auto& e : mp.entries())
    for (int part : e.nu) odd += (static_cast<long>(e.orbit.m) * part - 1) % 2;
  return parity_sign(odd);
}

bool in_X(const MultiPartition& mp, const InvolutionTuple& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (mp.entries()[i].orbit.d == -1 && stats(*w[i]).ell1_odd != 0) return false;
  return true;
}

bool in_Y(const MultiPartition& mp, const InvolutionTuple& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int l : w[i]->type1_cycles)
      if ((static_cast<long>(mp.entries()[i].orbit.m) * l) % 2 != 0) return false;
  return true;
}

int phi_w(const MultiPartition& mp, const InvolutionTuple& w) {
  if (w.size() != mp.entries().size()) throw ArgumentError("phi_w: tuple size differs from label size");
  if (!in_Y(mp, w)) throw ArgumentError("phi_w: involution tuple is not in Y");
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long m = mp.entries()[i].orbit.m;
    const int d = mp.entries()[i].orbit.d;
    for (int l : w[i]->type1_cycles) sign *= parity_sign(m * l / 2);
    if (d == -1) {
      for (int l : w[i]->type2_cycles) sign *= parity_sign(m * l / 2);
      for (int l : w[i]->type3_pairs) sign *= parity_sign(m * l);
    }
  }
  return sign;
}

ThreeTerm threeterm_direct(const MultiPartition& mp, int eps, std::uint64_t max_tuples) {
  if (!in_P_hat(mp)) throw ArgumentError("threeterm: label " + to_string(mp) + " is not in P-hat");
  const auto& entries = mp.entries();
  std::vector<std::vector<CentralizerInvolution>> lists;
  std::uint64_t count = 1;
  for (const auto& e : entries) {
    lists.push_back(enumerate_Zinv(e.nu));
    count = checked::umul(count, lists.back().size(), "involution tuple count");
    if (count > max_tuples)
      throw CapacityError("threeterm_direct: more than " + std::to_string(max_tuples) + " involution tuples");
  }

  std::int64_t sum_x = 0, sum_xy = 0, ff_count = 0;
  std::vector<std::size_t> idx(entries.size(), 0);
  InvolutionTuple w(entries.size());
  while (true) {
    int ell1 = 0;
    bool ff = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      w[i] = &lists[i][idx[i]];
      const InvolutionStats s = stats(*w[i]);
      ell1 += s.ell1;
      ff = ff && s.ff;
    }
    if (ff) ++ff_count;
    if (in_X(mp, w)) {
      const std::int64_t p = pow_minus_two(ell1);
      sum_x += p;
      if (in_Y(mp, w)) sum_xy += phi_w(mp, w) * p;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == lists[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }

  ThreeTerm t;
  t.t1 = sum_x;
  const auto half = half_norm_product(mp);
  if (half && half->is_identity()) t.t2 = 2 * eps * epsilon_nu(mp) * ff_count;
  if (sum_xy != 0) t.t3 = phi(mp.ctx(), mp) * sum_xy;
  return t;
}

ThreeTerm threeterm_factorized(const MultiPartition& mp, int eps) {
  if (!in_P_hat(mp)) throw ArgumentError("threeterm: label " + to_string(mp) + " is not in P-hat");
  std::int64_t first = 1, second = 1, third = 1;
  for (const auto& e : mp.entries()) {
    const auto list = enumerate_Zinv(e.nu);
    const long half_mnu = static_cast<long>(e.orbit.m) * e.nu.size() / 2;
    std::int64_t all = 0, no_odd = 0, no_odd_signed = 0, ff = 0;
    for (const auto& w : list) {
      const InvolutionStats s = stats(w);
      const std::int64_t p = pow_minus_two(s.ell1);
      all += p;
      if (s.ell1_odd == 0) {
        no_odd += p;
        no_odd_signed += parity_sign(s.ell1_2mod4) * p;
      }
      if (s.ff) ++ff;
    }
    first = checked::mul(first, e.orbit.d == 1 ? all : no_odd);
    second = checked::mul(second, sign(e.nu) * ff);
    std::int64_t f;
    if (e.orbit.d == 1 && e.orbit.m % 2 == 1)
      f = no_odd_signed;
    else if (e.orbit.d == 1)
      f = parity_sign(half_mnu) * all;
    else
      f = parity_sign(half_mnu) * no_odd;
    // A factor with m |nu| odd has no element of X intersect Y.
    if ((static_cast<long>(e.orbit.m) * e.nu.size()) % 2 != 0) f = 0;
    third = checked::mul(third, f);
  }
  ThreeTerm t;
  t.t1 = first;
  const auto half = half_norm_product(mp);
  if (half && half->is_identity()) t.t2 = 2 * eps * second;
  if (third != 0) t.t3 = phi(mp.ctx(), mp) * third;
  return t;
}

std::int64_t threeterm_bruteforce(const MultiPartition& mp, int eps) {
  if (eps != 1 && eps != -1) throw ArgumentError("epsilon must be +1 or -1");
  const ThreeTerm direct = threeterm_direct(mp, eps);
  const ThreeTerm factored = threeterm_factorized(mp, eps);
  if (!(direct == factored))
    throw InvariantViolation("threeterm: direct and factorized evaluations differ for " + to_string(mp));
  const std::int64_t q = direct.total_quarters();
  if (q % 4 != 0)
    throw InvariantViolation("threeterm: non-integral value " + std::to_string(q) + "/4 for " + to_string(mp));
  return q / 4;
}

bool parity_congruences_hold(const Partition& nu, unsigned m) {
  for (const auto& w : enumerate_Zinv(nu)) {
    long half_sum = 0;
    bool in_y = true;
    for (int l : w.type1_cycles) {
      if ((static_cast<long>(m) * l) % 2 != 0) in_y = false;
      half_sum += static_cast<long>(m) * l;
    }
    if (!in_y) continue;
    half_sum /= 2;
    if (m % 2 == 1) {
      if ((half_sum - stats(w).ell1_2mod4) % 2 != 0) return false;
    } else {
      if ((half_sum - static_cast<long>(m) * nu.size() / 2) % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace pglind
