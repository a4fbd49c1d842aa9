#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pglind {

class MultiPartition;

// The field size q, an odd prime power q = p^k >= 3.
class QContext {
public:
  explicit QContext(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }

  // q^e - 1; throws CapacityError if q^e does not fit in 64 bits.
  std::uint64_t q_pow_minus_one(unsigned e) const;

  friend bool operator==(const QContext& a, const QContext& b) { return a.q_ == b.q_; }

private:
  std::uint64_t q_;
  std::uint64_t p_;
  unsigned k_;
};

// An element of the dual group L, modeled as the fraction num/den in Q/Z.
// Reduced: 0 <= num < den, gcd(num, den) = 1, and the identity is 0/1.
// The group law is addition mod 1, and the Frobenius acts as x -> q x.
struct DualElem {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  DualElem() = default;
  // Requires an already reduced fraction; throws ArgumentError otherwise.
  DualElem(std::uint64_t num, std::uint64_t den);
  // Reduces num/den mod 1 to lowest terms.
  static DualElem reduced(std::uint64_t num, std::uint64_t den);

  bool is_identity() const { return num == 0; }

  friend bool operator==(const DualElem&, const DualElem&) = default;
  // Orders by (den, num), the order used for orbit representatives.
  friend std::strong_ordering operator<=>(const DualElem& a, const DualElem& b) {
    if (auto c = a.den <=> b.den; c != 0) return c;
    return a.num <=> b.num;
  }
};

DualElem operator+(const DualElem& a, const DualElem& b);
DualElem operator-(const DualElem& a);
// k * x in Q/Z; k may be negative.
DualElem scale(std::int64_t k, const DualElem& x);

std::string to_string(const DualElem& x);
// Parses "a/b" (reduced, 0 <= a < b, "0/1" for the identity).
DualElem parse_dual_elem(std::string_view text);

// Throws ArgumentError unless gcd(x.den, q) = 1.
void validate(const QContext& ctx, const DualElem& x);

struct OrbitData {
  DualElem rep;    // canonical representative of the sigma-orbit
  unsigned m = 1;  // orbit size m_xi
  DualElem norm;   // N(xi) = (1 + q + ... + q^{m-1}) xi, lies in L^sigma
  int d = 1;       // d_xi = <-1, N(xi)>

  friend bool operator==(const OrbitData&, const OrbitData&) = default;
};

// sigma(x) = q x.
DualElem sigma(const QContext& ctx, const DualElem& x);

// The order-2 element of L^sigma, i.e. 1/2.
DualElem eta(const QContext& ctx);

// Multiplicative order of q modulo x.den (1 for the identity).
unsigned orbit_size(const QContext& ctx, const DualElem& x);

// Orbit data of x, keyed by its canonical representative.
OrbitData orbit_data(const QContext& ctx, const DualElem& x);

// The element of the sigma-orbit of x with smallest (den, num).
DualElem canonical_rep(const QContext& ctx, const DualElem& x);

inline constexpr std::uint64_t kMaxDualElements = 20'000'000;

// Every sigma-orbit with m_xi <= n, once each, sorted by representative.
// Throws CapacityError beyond kMaxDualElements candidate elements.
std::vector<OrbitData> orbits_up_to(const QContext& ctx, unsigned n);

// Exponent of the root of unity <g_level^field_exp, x>_level, as a fraction
// in Q/Z, for norm-compatible generators g_e of F_{q^e}^x.
// Requires x.den | q^level - 1 (ArgumentError otherwise).
DualElem pairing_exponent(const QContext& ctx, unsigned level, std::int64_t field_exp,
                          const DualElem& x);

// The exponent (q+1)/2 of the square root of beta = g_1 in F_{q^2}, written as
// a power of g_2. Any other admissible square root is g_2^{(q+1)/2 + (q+1)j}.
std::int64_t default_sqrt_beta_exponent(const QContext& ctx);

// Phi(labels) = prod_xi <sqrt(beta), xi>_{m_xi |nu_xi|}, as +1 or -1.
// Requires Pi(labels) = 1 and every m_xi |nu_xi| even.
int phi(const QContext& ctx, const MultiPartition& labels);
// Same, with sqrt(beta) = g_2^{sqrt_beta_exp}; the exponent must be an odd
// multiple of (q+1)/2.
int phi(const QContext& ctx, const MultiPartition& labels, std::int64_t sqrt_beta_exp);

// For x with q x = -x: +1 if a square root zeta of x satisfies q zeta = -zeta,
// -1 if q zeta = -zeta + 1/2.
int tilde_d(const QContext& ctx, const DualElem& x);

}  // namespace pglind
