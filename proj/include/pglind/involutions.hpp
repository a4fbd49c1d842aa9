#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pglind/params.hpp"
#include "pglind/partition.hpp"

namespace pglind {

// An involution z of S_|nu| commuting with the base permutation w_nu, with
// the cycles of w_nu sorted by how z acts on them.
struct CentralizerInvolution {
  Partition nu;
  std::vector<int> perm;          // z as an image table on 0..|nu|-1
  std::vector<int> type1_cycles;  // lengths of cycles z fixes pointwise
  std::vector<int> type2_cycles;  // lengths of cycles z maps to themselves by a half turn
  std::vector<int> type3_pairs;   // lengths of pairs of cycles z swaps (one entry per pair)
};

struct InvolutionStats {
  int ell1 = 0;
  int ell1_odd = 0;
  int ell1_2mod4 = 0;
  bool ff = false;

  friend bool operator==(const InvolutionStats&, const InvolutionStats&) = default;
};

inline constexpr int kDefaultInvolutionBound = 9;

// w_nu with cycles on consecutive points in decreasing part order, each cycle
// s -> s+1 -> ... -> s. With `alternate`, parts are laid out in increasing
// order and every cycle runs backwards.
std::vector<int> base_permutation(const Partition& nu, bool alternate = false);

// Every involution (identity included) of S_|nu| commuting with w_nu.
// Throws CapacityError when |nu| exceeds `bound`.
std::vector<CentralizerInvolution> enumerate_Zinv(const Partition& nu, int bound = kDefaultInvolutionBound);
std::vector<CentralizerInvolution> enumerate_Zinv(const Partition& nu, const std::vector<int>& base,
                                                  int bound = kDefaultInvolutionBound);

InvolutionStats stats(const CentralizerInvolution& w);

struct IdentityCheckResult {
  std::string name;
  Partition nu;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

// #fixed-point-free elements of Z_inv = sum over even rho of chi^rho_nu.
IdentityCheckResult identity_ff_count(const Partition& nu, int bound = kDefaultInvolutionBound);
// sum_w (-2)^ell1 = (-1)^|nu| sum_rho prod_i (m_i(rho)+1) chi^rho_nu.
IdentityCheckResult identity_weighted_all(const Partition& nu, int bound = kDefaultInvolutionBound);
// sum_{w: ell1_odd = 0} (-2)^ell1 = sum_{rho' even} chi^rho_nu.
IdentityCheckResult identity_odd_free(const Partition& nu, int bound = kDefaultInvolutionBound);
// sum_{w: ell1_odd = 0} (-1)^ell1_2mod4 (-2)^ell1
//   = sum_{rho: 2 | m_{2i+1}} (-1)^{|rho|/2 + l(rho)_2mod4} prod_i (m_2i(rho)+1) chi^rho_nu.
IdentityCheckResult identity_signed_odd_free(const Partition& nu, int bound = kDefaultInvolutionBound);

// All four identities for every nu of size 1..max_size.
std::vector<IdentityCheckResult> verify_identities(int max_size, int bound = kDefaultInvolutionBound);

// prod over orbits and parts of (-1)^{m_xi (nu_xi)_j - 1}.
int epsilon_nu(const MultiPartition& mp);

// One involution per label entry, in entry order.
using InvolutionTuple = std::vector<const CentralizerInvolution*>;

bool in_X(const MultiPartition& mp, const InvolutionTuple& w);
bool in_Y(const MultiPartition& mp, const InvolutionTuple& w);
// Phi(w); ArgumentError unless w is in Y.
int phi_w(const MultiPartition& mp, const InvolutionTuple& w);

// The three terms of the involution-sum formula, each scaled by 4.
struct ThreeTerm {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::int64_t t3 = 0;
  std::int64_t total_quarters() const { return t1 + t2 + t3; }
  friend bool operator==(const ThreeTerm&, const ThreeTerm&) = default;
};

inline constexpr std::uint64_t kMaxInvolutionTuples = 5'000'000;

// Direct enumeration over all tuples (w_xi).
ThreeTerm threeterm_direct(const MultiPartition& mp, int eps, std::uint64_t max_tuples = kMaxInvolutionTuples);
// Orbit-by-orbit factorized evaluation.
ThreeTerm threeterm_factorized(const MultiPartition& mp, int eps);
// Runs both evaluations, requires them to agree term by term, and returns the
// integral total. InvariantViolation on disagreement or non-integrality.
std::int64_t threeterm_bruteforce(const MultiPartition& mp, int eps);

// For every w in Z_inv^nu lying in Y for orbit size m, the parity facts
// relating sum_{type 1} m l / 2 to ell1_2mod4 (m odd) or m |nu| / 2 (m even).
bool parity_congruences_hold(const Partition& nu, unsigned m);

}  // namespace pglind
