#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "pglind/crosscheck.hpp"
#include "pglind/formulas.hpp"
#include "pglind/involutions.hpp"
#include "pglind/oracle.hpp"

using namespace pglind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::string str(const BigInt& v) { return v.str(); }

Outcome unipotent_table() {
  Outcome o;
  const std::vector<Partition> cols{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  const std::map<Subgroup, std::vector<std::int64_t>> rows{
      {Subgroup::PGSp, {1, 0, 1, 0, 0}},
      {Subgroup::PGOPlus, {1, 1, 2, 1, 2}},
      {Subgroup::PGOMinus, {1, 1, 1, 1, 1}},
  };
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const QContext ctx(q);
    for (const auto& [s, want] : rows)
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const MultiPartition mp(ctx, 4, {{DualElem{}, cols[i]}});
        const auto got = mult_irr(mp, s);
        expect(o, got == want[i],
               "q=" + std::to_string(q) + " " + to_string(s) + " " + to_string(cols[i]) + ": " + std::to_string(got));
      }
  }
  return o;
}

// Constituents of the n = 2 inductions, listed from the closed form.
std::set<std::string> n2_closed_form(std::uint64_t q, Subgroup s) {
  const QContext ctx(q);
  std::set<std::string> out{"0/1:[2]"};
  if (s == Subgroup::PGSp) return out;
  if (s == Subgroup::PGOPlus) out.insert("0/1:[1,1]");
  if (q % 4 == 1) out.insert("1/2:[1,1]");
  std::set<DualElem> seen;
  // split torus: xi in L^sigma, i.e. den | q - 1
  for (std::uint64_t num = 1; num < q - 1; ++num) {
    const DualElem xi = DualElem::reduced(num, q - 1);
    if (xi == DualElem(1, 2) || seen.count(xi)) continue;
    seen.insert(xi);
    seen.insert(-xi);
    const bool d_plus = (xi.num * ((q - 1) / xi.den)) % 2 == 0;
    if (!d_plus) continue;
    const MultiPartition mp(ctx, 2, {{xi, Partition{1}}, {-xi, Partition{1}}});
    out.insert(to_string(mp));
  }
  // nonsplit torus: q xi = -xi, i.e. den | q + 1, xi not of order <= 2
  for (std::uint64_t num = 1; num <= q; ++num) {
    const DualElem xi = DualElem::reduced(num, q + 1);
    if (xi.den <= 2) continue;
    const DualElem zeta = DualElem::reduced(xi.num, 2 * xi.den);
    const bool tilde_plus = scale(static_cast<std::int64_t>(q), zeta) == -zeta;
    if (tilde_plus) continue;
    out.insert(to_string(MultiPartition(ctx, 2, {{xi, Partition{1}}})));
  }
  return out;
}

Outcome n2_decompositions() {
  Outcome o;
  for (std::uint64_t q : {3, 5, 7})
    for (Subgroup s : kAllSubgroups) {
      std::set<std::string> got;
      for (const auto& row : decompose(QContext(q), 2, s).rows) {
        expect(o, row.mult == 1, "q=" + std::to_string(q) + " " + to_string(row.label) + " not multiplicity one");
        got.insert(to_string(row.label));
      }
      expect(o, got == n2_closed_form(q, s), "q=" + std::to_string(q) + " " + to_string(s) + " constituent list");
    }
  return o;
}

Outcome degree_sums() {
  Outcome o;
  for (std::uint64_t q : {3, 5, 7}) {
    const auto ord = orders(q, 2);
    for (Subgroup s : kAllSubgroups) {
      DecomposeOptions opts;
      opts.with_degrees = true;
      const auto r = decompose(QContext(q), 2, s, opts);
      expect(o, r.sum_mult_times_degree && *r.sum_mult_times_degree == ord.index(s),
             "q=" + std::to_string(q) + " " + to_string(s) + " sum_md vs index " + str(ord.index(s)));
    }
  }
  return o;
}

Outcome double_coset_counts() {
  Outcome o;
  for (std::uint64_t q : {3, 5}) {
    const ProjectiveGroup g(q, 2);
    for (Subgroup s : kAllSubgroups) {
      const auto r = decompose(QContext(q), 2, s);
      const auto dc = double_cosets(g, s, s);
      expect(o, r.sum_mult_squared == dc,
             "q=" + std::to_string(q) + " " + to_string(s) + ": sum_m2 " + str(r.sum_mult_squared) +
                 " vs double cosets " + std::to_string(dc));
    }
  }
  return o;
}

Outcome three_routes() {
  Outcome o;
  for (std::uint64_t q : {3, 5})
    for (int n : {2, 4}) {
      const auto summary = cross_check(QContext(q), n, 0);
      expect(o, summary.labels_checked == summary.labels_total, "not every label checked");
      expect(o, summary.disagreements.empty(),
             "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                 std::to_string(summary.disagreements.size()) + " disagreements");
      for (const auto& nu : enumerate_labels(QContext(q), n, true))
        for (int eps : {1, -1})
          expect(o, threeterm_bruteforce(nu, eps) == mult_pgo_basic(nu, eps), "involution route " + to_string(nu));
    }
  return o;
}

Outcome identities() {
  Outcome o;
  for (int max_size : {7, 9})
    for (const auto& r : verify_identities(max_size))
      expect(o, r.pass, r.name + " on " + to_string(r.nu));
  return o;
}

MultiPartition random_label(const QContext& ctx, int n, const std::vector<OrbitData>& orbits, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<DualElem, Partition>> entries;
    std::set<DualElem> used;
    int left = n;
    while (left > 0) {
      const auto& orb = orbits[std::uniform_int_distribution<std::size_t>(0, orbits.size() - 1)(rng)];
      if (static_cast<int>(orb.m) > left || used.count(orb.rep)) continue;
      const int size = std::uniform_int_distribution<int>(1, left / static_cast<int>(orb.m))(rng);
      const auto& parts = partitions_of(size);
      entries.emplace_back(orb.rep, parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)]);
      used.insert(orb.rep);
      left -= size * static_cast<int>(orb.m);
    }
    MultiPartition mp(ctx, n, entries);
    if (in_P_hat(mp)) return mp;
  }
}

void check_label(Outcome& o, const MultiPartition& mp) {
  const int sp = mult_pgsp_irr(mp);
  expect(o, sp == 0 || sp == 1, "PGSp multiplicity " + std::to_string(sp) + " at " + to_string(mp));
  for (int eps : {1, -1}) {
    const auto t = pgo_irr_terms(mp, eps);
    expect(o, t.total_quarters() % 4 == 0 && t.total_quarters() >= 0, "PGO value at " + to_string(mp));
  }
}

Outcome integrality() {
  Outcome o;
  for (std::uint64_t q : {3, 5, 7})
    for (int n : {2, 4})
      for (const auto& mp : enumerate_labels(QContext(q), n, true)) check_label(o, mp);
  const QContext ctx(9);
  const auto orbits = orbits_up_to(ctx, 6);
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) check_label(o, random_label(ctx, 6, orbits, rng));
  for (int n = 2; n <= 10; n += 2)
    for (const auto& rho : partitions_of(n))
      for (int eps : {1, -1}) {
        const auto lo = mult_unipotent_pgo(rho, eps);
        expect(o, lo >= 0 && lo <= mult_unipotent_gl_o(rho, eps), "unipotent inequality at " + to_string(rho));
      }
  return o;
}

Outcome structural_counts() {
  Outcome o;
  for (std::uint64_t q : {3, 5, 7}) {
    const ProjectiveGroup g(q, 2);
    const auto labels = enumerate_labels(QContext(q), 2, true);
    const auto classes = conjugacy_class_count(g);
    expect(o, labels.size() == classes,
           "q=" + std::to_string(q) + ": " + std::to_string(labels.size()) + " labels vs " + std::to_string(classes) +
               " classes");
  }
  for (std::uint64_t q : {3, 5, 7})
    for (int n : {2, 4}) {
      BigInt total = 0;
      for (const auto& mp : enumerate_labels(QContext(q), n, true)) {
        const BigInt d = degree(mp);
        total += d * d;
      }
      expect(o, total == orders(q, n).pgl, "sum of squared degrees at q=" + std::to_string(q));
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"n=4 unipotent table, q in {3,5,7,9}", 1.0, unipotent_table},
      {"n=2 closed-form decompositions, q in {3,5,7}", 1.0, n2_decompositions},
      {"sum of mult * degree equals the index", 5.0, degree_sums},
      {"sum of mult^2 equals the double coset count", 60.0, double_coset_counts},
      {"three-route equality, q in {3,5}, n in {2,4}", 300.0, three_routes},
      {"combinatorial identities, m <= 7 and m <= 9", 300.0, identities},
      {"integrality, nonnegativity and the unipotent inequality", 300.0, integrality},
      {"label count equals class count, squared degrees sum to |PGL|", 60.0, structural_counts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > criteria[i].budget_s) out = {false, "over time budget"};
    if (!out.pass) ++failures;
    std::printf("%s  [%zu] %s  (%.3f s)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                out.pass ? "" : "  ", out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
