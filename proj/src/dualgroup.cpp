#include "pglind/dualgroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pglind/checked.hpp"
#include "pglind/error.hpp"
#include "pglind/params.hpp"

namespace pglind {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return f;
  return n;
}

// sum_{i<count} base^{i*stride} mod m.
std::uint64_t geometric_sum_mod(std::uint64_t base, unsigned stride, unsigned count, std::uint64_t m) {
  std::uint64_t step = 1 % m;
  for (unsigned i = 0; i < stride; ++i) step = mulmod(step, base % m, m);
  std::uint64_t term = 1 % m, total = 0;
  for (unsigned i = 0; i < count; ++i) {
    total = (total + term) % m;
    term = mulmod(term, step, m);
  }
  return total;
}

}  // namespace

QContext::QContext(std::uint64_t q) : q_(q) {
  if (q < 3 || q % 2 == 0) throw ArgumentError("q must be an odd prime power >= 3, got " + std::to_string(q));
  p_ = smallest_prime_factor(q);
  std::uint64_t rest = q;
  k_ = 0;
  while (rest % p_ == 0) {
    rest /= p_;
    ++k_;
  }
  if (rest != 1) throw ArgumentError("q must be a prime power, got " + std::to_string(q));
}

std::uint64_t QContext::q_pow_minus_one(unsigned e) const { return checked::upow(q_, e, "q^e") - 1; }

DualElem::DualElem(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
  if (d == 0) throw ArgumentError("dual element denominator must be positive");
  if (n >= d) throw ArgumentError("dual element numerator must be < denominator");
  if (std::gcd(n, d) != 1 && !(n == 0 && d == 1))
    throw ArgumentError("dual element fraction must be in lowest terms (0/1 for the identity)");
}

DualElem DualElem::reduced(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw ArgumentError("dual element denominator must be positive");
  n %= d;
  if (n == 0) return DualElem{};
  const std::uint64_t g = std::gcd(n, d);
  DualElem x;
  x.num = n / g;
  x.den = d / g;
  return x;
}

DualElem operator+(const DualElem& a, const DualElem& b) {
  const std::uint64_t g = std::gcd(a.den, b.den);
  const std::uint64_t l = checked::umul(a.den / g, b.den, "dual element sum denominator");
  const std::uint64_t na = mulmod(a.num, l / a.den, l);
  const std::uint64_t nb = mulmod(b.num, l / b.den, l);
  return DualElem::reduced((na + nb) % l, l);
}

DualElem operator-(const DualElem& a) {
  if (a.num == 0) return a;
  return DualElem::reduced(a.den - a.num, a.den);
}

DualElem scale(std::int64_t k, const DualElem& x) {
  const auto d = static_cast<std::int64_t>(x.den);
  std::int64_t kk = k % d;
  if (kk < 0) kk += d;
  return DualElem::reduced(mulmod(static_cast<std::uint64_t>(kk), x.num, x.den), x.den);
}

std::string to_string(const DualElem& x) { return std::to_string(x.num) + "/" + std::to_string(x.den); }

DualElem parse_dual_elem(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ArgumentError("dual element must look like a/b: '" + std::string(text) + "'");
  std::uint64_t a = 0, b = 0;
  auto parse = [&](std::string_view s, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ArgumentError("dual element must look like a/b: '" + std::string(text) + "'");
  };
  parse(text.substr(0, slash), a);
  parse(text.substr(slash + 1), b);
  return DualElem(a, b);
}

void validate(const QContext& ctx, const DualElem& x) {
  if (std::gcd(x.den, ctx.p()) != 1)
    throw ArgumentError("dual element " + to_string(x) + " has denominator divisible by p = " +
                        std::to_string(ctx.p()));
}

DualElem sigma(const QContext& ctx, const DualElem& x) {
  return DualElem::reduced(mulmod(x.num, ctx.q() % x.den, x.den), x.den);
}

DualElem eta(const QContext&) { return DualElem(1, 2); }

unsigned orbit_size(const QContext& ctx, const DualElem& x) {
  if (x.den == 1) return 1;
  const std::uint64_t qm = ctx.q() % x.den;
  std::uint64_t power = qm;
  unsigned m = 1;
  while (power != 1) {
    power = mulmod(power, qm, x.den);
    ++m;
    if (m > 64) throw CapacityError("orbit of " + to_string(x) + " is too long");
  }
  return m;
}

DualElem canonical_rep(const QContext& ctx, const DualElem& x) {
  validate(ctx, x);
  DualElem best = x, y = x;
  const unsigned m = orbit_size(ctx, x);
  for (unsigned i = 1; i < m; ++i) {
    y = sigma(ctx, y);
    best = std::min(best, y);
  }
  return best;
}

OrbitData orbit_data(const QContext& ctx, const DualElem& x) {
  validate(ctx, x);
  OrbitData o;
  o.rep = canonical_rep(ctx, x);
  o.m = orbit_size(ctx, x);
  const std::uint64_t factor = geometric_sum_mod(ctx.q(), 1, o.m, x.den);
  o.norm = DualElem::reduced(mulmod(factor, x.num, x.den), x.den);
  if ((ctx.q() - 1) % o.norm.den != 0)
    throw InvariantViolation("norm " + to_string(o.norm) + " is not sigma-fixed");
  // -1 = g^{(q-1)/2}, so <-1, c/d> = (-1)^{c (q-1)/d}.
  const std::uint64_t parity = (o.norm.num % 2) * (((ctx.q() - 1) / o.norm.den) % 2);
  o.d = parity ? -1 : 1;
  return o;
}

std::vector<OrbitData> orbits_up_to(const QContext& ctx, unsigned n) {
  std::uint64_t total = 0;
  for (unsigned e = 1; e <= n; ++e) {
    total += ctx.q_pow_minus_one(e);
    if (total > kMaxDualElements)
      throw CapacityError("orbits_up_to: q = " + std::to_string(ctx.q()) + ", n = " + std::to_string(n) +
                          " needs more than " + std::to_string(kMaxDualElements) + " elements");
  }
  std::vector<OrbitData> out;
  for (unsigned e = 1; e <= n; ++e) {
    const std::uint64_t modulus = ctx.q_pow_minus_one(e);
    for (std::uint64_t k = 0; k < modulus; ++k) {
      const DualElem x = DualElem::reduced(k, modulus);
      if (orbit_size(ctx, x) != e) continue;
      if (canonical_rep(ctx, x) != x) continue;
      out.push_back(orbit_data(ctx, x));
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitData& a, const OrbitData& b) { return a.rep < b.rep; });
  return out;
}

DualElem pairing_exponent(const QContext& ctx, unsigned level, std::int64_t field_exp, const DualElem& x) {
  if (level == 0) throw ArgumentError("pairing level must be positive");
  const std::uint64_t modulus = ctx.q_pow_minus_one(level);
  if (modulus % x.den != 0)
    throw ArgumentError("pairing: " + to_string(x) + " is not fixed by sigma^" + std::to_string(level));
  const std::uint64_t t = x.num * (modulus / x.den);
  std::int64_t f = field_exp % static_cast<std::int64_t>(modulus);
  if (f < 0) f += static_cast<std::int64_t>(modulus);
  return DualElem::reduced(mulmod(static_cast<std::uint64_t>(f), t, modulus), modulus);
}

std::int64_t default_sqrt_beta_exponent(const QContext& ctx) {
  return static_cast<std::int64_t>((ctx.q() + 1) / 2);
}

int phi(const QContext& ctx, const MultiPartition& labels) {
  return phi(ctx, labels, default_sqrt_beta_exponent(ctx));
}

int phi(const QContext& ctx, const MultiPartition& labels, std::int64_t sqrt_beta_exp) {
  const auto half = static_cast<std::int64_t>((ctx.q() + 1) / 2);
  if (sqrt_beta_exp % half != 0 || (sqrt_beta_exp / half) % 2 == 0)
    throw ArgumentError("phi: g_2^" + std::to_string(sqrt_beta_exp) + " is not a square root of an element of F_q outside F_q");
  if (!in_P_hat(labels)) throw ArgumentError("phi: requires Pi(labels) = 1");
  DualElem total;
  for (const auto& entry : labels.entries()) {
    const unsigned level = entry.orbit.m * static_cast<unsigned>(entry.nu.size());
    if (level % 2 != 0) throw ArgumentError("phi: requires every m_xi |nu_xi| even");
    // sqrt(beta) = g_level^{a (q^level - 1)/(q^2 - 1)} by norm compatibility.
    const std::uint64_t modulus = ctx.q_pow_minus_one(level);
    const std::uint64_t ratio = modulus / ctx.q_pow_minus_one(2);
    std::int64_t a = sqrt_beta_exp % static_cast<std::int64_t>(modulus);
    if (a < 0) a += static_cast<std::int64_t>(modulus);
    const auto field_exp = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(a), ratio, modulus));
    total = total + pairing_exponent(ctx, level, field_exp, entry.orbit.rep);
  }
  if (total.is_identity()) return 1;
  if (total == DualElem(1, 2)) return -1;
  throw InvariantViolation("phi: pairing product " + to_string(total) + " is not a sign");
}

int tilde_d(const QContext& ctx, const DualElem& x) {
  validate(ctx, x);
  if (sigma(ctx, x) != -x) throw ArgumentError("tilde_d: " + to_string(x) + " does not satisfy q x = -x");
  // zeta = num / (2 den); q zeta + zeta = (q + 1) num / (2 den) is 0 or 1/2 mod 1.
  const std::uint64_t two_den = 2 * x.den;
  const std::uint64_t v = mulmod((ctx.q() + 1) % two_den, x.num, two_den);
  if (v == 0) return 1;
  if (v == x.den) return -1;
  throw InvariantViolation("tilde_d: inconsistent half for " + to_string(x));
}

}  // namespace pglind
