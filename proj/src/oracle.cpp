#include "pglind/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "pglind/error.hpp"

namespace pglind {

namespace {

BigInt big_pow(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0 || a % b != 0) throw InvariantViolation(std::string(what) + ": division is not exact");
  return a / b;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    std::uint64_t x = g;
    std::uint64_t order = 1;
    while (x != 1) {
      x = x * g % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;  // p = 2 is rejected earlier; for p = 3 the loop returns 2
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::uint64_t components() {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

const BigInt& GroupOrders::order(Subgroup s) const {
  switch (s) {
    case Subgroup::PGSp: return pgsp;
    case Subgroup::PGOPlus: return pgo_plus;
    case Subgroup::PGOMinus: return pgo_minus;
  }
  return pgsp;
}

const BigInt& GroupOrders::index(Subgroup s) const {
  switch (s) {
    case Subgroup::PGSp: return index_pgsp;
    case Subgroup::PGOPlus: return index_pgo_plus;
    case Subgroup::PGOMinus: return index_pgo_minus;
  }
  return index_pgsp;
}

GroupOrders orders(std::uint64_t q, int n) {
  const QContext ctx(q);
  if (n < 2 || n % 2 != 0) throw ArgumentError("orders: n must be even and >= 2");
  const unsigned m = static_cast<unsigned>(n / 2);
  GroupOrders o;
  o.q = q;
  o.n = n;
  const BigInt qn = big_pow(q, n);
  o.gl = 1;
  for (int i = 0; i < n; ++i) o.gl *= qn - big_pow(q, i);
  o.sp = big_pow(q, m * m);
  for (unsigned i = 1; i <= m; ++i) o.sp *= big_pow(q, 2 * i) - 1;
  BigInt common = 2 * big_pow(q, m * (m - 1));
  for (unsigned i = 1; i < m; ++i) common *= big_pow(q, 2 * i) - 1;
  o.o_plus = common * (big_pow(q, m) - 1);
  o.o_minus = common * (big_pow(q, m) + 1);
  o.pgl = exact_div(o.gl, BigInt(q - 1), "orders: |PGL|");
  // Sp_n and O_n meet the scalars in {+-1}, and the similitude groups add a
  // factor q - 1 on top, so the projective groups have the same orders.
  o.pgsp = o.sp;
  o.pgo_plus = o.o_plus;
  o.pgo_minus = o.o_minus;
  o.index_pgsp = exact_div(o.pgl, o.pgsp, "orders: PGSp index");
  o.index_pgo_plus = exact_div(o.pgl, o.pgo_plus, "orders: PGO+ index");
  o.index_pgo_minus = exact_div(o.pgl, o.pgo_minus, "orders: PGO- index");
  return o;
}

BigInt degree(const MultiPartition& label) {
  const std::uint64_t q = label.ctx().q();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= label.n(); ++i) num *= big_pow(q, i) - 1;
  for (const auto& e : label.entries()) {
    const Partition& rho = e.nu;
    const Partition rt = transpose(rho);
    long n_rho = 0;
    for (int i = 0; i < rho.length(); ++i) n_rho += static_cast<long>(i) * rho[i];
    num *= big_pow(q, static_cast<unsigned>(e.orbit.m * n_rho));
    for (int i = 0; i < rho.length(); ++i)
      for (int j = 0; j < rho[i]; ++j) {
        const int hook = (rho[i] - j) + (rt[j] - i) - 1;
        den *= big_pow(q, static_cast<unsigned>(e.orbit.m * hook)) - 1;
      }
  }
  return exact_div(num, den, "degree");
}

ProjectiveGroup::ProjectiveGroup(std::uint64_t p, int n) : p_(p), n_(n) {
  const QContext ctx(p);
  if (ctx.k() != 1) throw ArgumentError("matrix oracle needs a prime q, got " + std::to_string(p));
  if (n < 1) throw ArgumentError("matrix oracle needs n >= 1");
  BigInt order = 1;
  for (int i = 0; i < n; ++i) order *= big_pow(p, n) - big_pow(p, i);
  order /= (p - 1);
  if (order > kMaxProjectiveOrder)
    throw CapacityError("matrix oracle: |PGL_" + std::to_string(n) + "(" + std::to_string(p) + ")| = " +
                        order.str() + " exceeds " + std::to_string(kMaxProjectiveOrder));
  if (big_pow(p, n * n) > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw CapacityError("matrix oracle: matrix keys do not fit in 64 bits");

  Matrix id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix t = id;
      t[i * n + j] = 1;
      gens.push_back(t);
    }
  Matrix d = id;
  d[0] = static_cast<int>(primitive_root(p));
  gens.push_back(normalize(d));

  elements_.push_back(id);
  index_.emplace(key(id), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const Matrix& s : gens) {
      Matrix x = normalize(mul(elements_[head], s));
      const std::uint64_t k = key(x);
      if (index_.count(k)) continue;
      index_.emplace(k, elements_.size());
      elements_.push_back(std::move(x));
    }
  }
  if (BigInt(elements_.size()) != order)
    throw InvariantViolation("matrix oracle: generated " + std::to_string(elements_.size()) + " elements, expected " +
                             order.str());
  for (const Matrix& s : gens) generators_.push_back(index_of(s));
}

std::size_t ProjectiveGroup::index_of(const Matrix& normalized) const {
  auto it = index_.find(key(normalized));
  if (it == index_.end()) throw InvariantViolation("matrix oracle: element not in group");
  return it->second;
}

std::size_t ProjectiveGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(normalize(mul(elements_[a], elements_[b])));
}

std::size_t ProjectiveGroup::inverse(std::size_t a) const {
  std::size_t prev = identity(), x = a;
  while (x != identity()) {
    prev = x;
    x = multiply(x, a);
  }
  return prev;
}

Matrix ProjectiveGroup::mul(const Matrix& a, const Matrix& b) const {
  Matrix c(n_ * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const std::uint64_t aik = a[i * n_ + k];
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) c[i * n_ + j] = static_cast<int>((c[i * n_ + j] + aik * b[k * n_ + j]) % p_);
    }
  return c;
}

Matrix ProjectiveGroup::transpose(const Matrix& a) const {
  Matrix t(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[j * n_ + i] = a[i * n_ + j];
  return t;
}

Matrix ProjectiveGroup::normalize(Matrix a) const {
  auto it = std::find_if(a.begin(), a.end(), [](int v) { return v != 0; });
  if (it == a.end()) throw ArgumentError("matrix oracle: zero matrix");
  const std::uint64_t inv = pow_mod(*it, p_ - 2, p_);
  for (int& v : a) v = static_cast<int>(v * inv % p_);
  return a;
}

std::uint64_t ProjectiveGroup::key(const Matrix& a) const {
  std::uint64_t k = 0;
  for (int v : a) k = k * p_ + static_cast<std::uint64_t>(v);
  return k;
}

std::int64_t ProjectiveGroup::det(Matrix a) const {
  std::uint64_t d = 1;
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (a[r * n_ + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) std::swap(a[pivot * n_ + j], a[c * n_ + j]);
      d = (p_ - d) % p_;
    }
    const std::uint64_t pv = a[c * n_ + c];
    d = d * pv % p_;
    const std::uint64_t inv = pow_mod(pv, p_ - 2, p_);
    for (int r = c + 1; r < n_; ++r) {
      const std::uint64_t f = a[r * n_ + c] * inv % p_;
      if (f == 0) continue;
      for (int j = c; j < n_; ++j)
        a[r * n_ + j] = static_cast<int>((a[r * n_ + j] + (p_ - f) * a[c * n_ + j]) % p_);
    }
  }
  return static_cast<std::int64_t>(d);
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Skew: return "skew";
    case FormKind::SymmetricPlus: return "symmetric+";
    case FormKind::SymmetricMinus: return "symmetric-";
  }
  return "?";
}

Subgroup stabilizer_subgroup(FormKind k) {
  switch (k) {
    case FormKind::Skew: return Subgroup::PGSp;
    case FormKind::SymmetricPlus: return Subgroup::PGOPlus;
    case FormKind::SymmetricMinus: return Subgroup::PGOMinus;
  }
  return Subgroup::PGSp;
}

std::vector<FormOrbit> enumerate_forms(std::uint64_t p, int n) { return enumerate_forms(ProjectiveGroup(p, n)); }

std::vector<FormOrbit> enumerate_forms(const ProjectiveGroup& g) {
  const int n = g.n();
  const std::uint64_t p = g.p();
  // Free entries: the upper triangle, with the diagonal only for symmetric forms.
  std::map<std::uint64_t, Matrix> forms;
  for (int skew = 0; skew < 2; ++skew) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + skew; j < n; ++j) slots.emplace_back(i, j);
    const BigInt total = big_pow(p, static_cast<unsigned>(slots.size()));
    if (total > 10'000'000) throw CapacityError("enumerate_forms: too many candidate Gram matrices");
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 0; code < count; ++code) {
      Matrix h(n * n, 0);
      std::uint64_t c = code;
      for (auto [i, j] : slots) {
        const int v = static_cast<int>(c % p);
        c /= p;
        h[i * n + j] = v;
        h[j * n + i] = (skew && v != 0) ? static_cast<int>(p) - v : v;
      }
      if (g.det(h) == 0) continue;
      const Matrix norm = g.normalize(h);
      forms.emplace(g.key(norm), norm);
    }
  }

  std::vector<Matrix> gens;
  for (std::size_t s : g.generators()) gens.push_back(g.element(s));
  std::map<std::uint64_t, bool> seen;
  std::vector<FormOrbit> orbits;
  for (const auto& [k, h] : forms) {
    if (seen.count(k)) continue;
    FormOrbit orbit;
    orbit.representative = h;
    std::deque<Matrix> queue{h};
    seen[k] = true;
    while (!queue.empty()) {
      const Matrix x = queue.front();
      queue.pop_front();
      ++orbit.size;
      for (const Matrix& s : gens) {
        Matrix y = g.normalize(g.mul(g.mul(s, x), g.transpose(s)));
        const std::uint64_t ky = g.key(y);
        if (!forms.count(ky)) throw InvariantViolation("enumerate_forms: action left the set of forms");
        if (seen.count(ky)) continue;
        seen[ky] = true;
        queue.push_back(std::move(y));
      }
    }
    Matrix neg = h;
    for (int& v : neg) v = (v == 0) ? 0 : static_cast<int>(p) - v;
    if (g.transpose(h) == neg) {
      orbit.kind = FormKind::Skew;
    } else {
      // Witt index n/2 iff (-1)^{n/2} det is a square; well defined mod scalars since n is even.
      std::uint64_t c = static_cast<std::uint64_t>(g.det(h));
      if ((n / 2) % 2 == 1) c = (p - c) % p;
      orbit.kind = pow_mod(c, (p - 1) / 2, p) == 1 ? FormKind::SymmetricPlus : FormKind::SymmetricMinus;
    }
    orbit.stabilizer_order = form_stabilizer(g, h).size();
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const FormOrbit& a, const FormOrbit& b) { return a.kind < b.kind; });
  return orbits;
}

std::vector<std::size_t> form_stabilizer(const ProjectiveGroup& g, const Matrix& h) {
  const Matrix target = g.normalize(h);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Matrix& x = g.element(i);
    if (g.normalize(g.mul(g.mul(x, target), g.transpose(x))) == target) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> generating_set(const ProjectiveGroup& g, const std::vector<std::size_t>& subgroup) {
  std::vector<std::size_t> gens;
  std::vector<char> inside(g.size(), 0);
  std::vector<std::size_t> closure{g.identity()};
  inside[g.identity()] = 1;
  for (std::size_t h : subgroup) {
    if (inside[h]) continue;
    gens.push_back(h);
    for (std::size_t head = 0; head < closure.size(); ++head)
      for (std::size_t s : gens) {
        const std::size_t y = g.multiply(closure[head], s);
        if (inside[y]) continue;
        inside[y] = 1;
        closure.push_back(y);
      }
  }
  if (closure.size() != subgroup.size()) throw InvariantViolation("generating_set: input is not a subgroup");
  return gens;
}

std::uint64_t double_cosets(std::uint64_t p, int n, Subgroup h1, Subgroup h2) {
  return double_cosets(ProjectiveGroup(p, n), h1, h2);
}

std::uint64_t double_cosets(const ProjectiveGroup& g, Subgroup h1, Subgroup h2) {
  const auto orbits = enumerate_forms(g);
  auto gens_for = [&](Subgroup s) {
    for (const auto& o : orbits)
      if (stabilizer_subgroup(o.kind) == s) return generating_set(g, form_stabilizer(g, o.representative));
    throw InvariantViolation("double_cosets: no form orbit for " + to_string(s));
  };
  const auto left = gens_for(h1);
  const auto right = gens_for(h2);
  UnionFind uf(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t a : left) uf.unite(x, g.multiply(a, x));
    for (std::size_t b : right) uf.unite(x, g.multiply(x, b));
  }
  return uf.components();
}

std::uint64_t conjugacy_class_count(std::uint64_t p, int n) { return conjugacy_class_count(ProjectiveGroup(p, n)); }

std::uint64_t conjugacy_class_count(const ProjectiveGroup& g) {
  UnionFind uf(g.size());
  for (std::size_t a : g.generators()) {
    const std::size_t ai = g.inverse(a);
    for (std::size_t x = 0; x < g.size(); ++x) uf.unite(x, g.multiply(g.multiply(a, x), ai));
  }
  return uf.components();
}

}  // namespace pglind
