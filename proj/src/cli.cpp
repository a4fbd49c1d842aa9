#include "pglind/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pglind/crosscheck.hpp"
#include "pglind/error.hpp"
#include "pglind/formulas.hpp"
#include "pglind/involutions.hpp"
#include "pglind/oracle.hpp"
#include "pglind/report.hpp"
#include "pglind/symchar.hpp"

namespace pglind {

namespace {

struct Config {
  std::uint64_t q = 3;
  int n = 2;
  std::string subgroup = "pgsp";
  std::string label;
  std::string format = "table";
  bool include_zeros = false;
  bool degrees = false;
  bool unipotent_only = false;
  std::string tier = "fast";
  std::string cache;
  int max_size = 0;
  std::string h1 = "pgo+";
  std::string h2;
};

constexpr std::size_t kFastCrossCheckLabels = 2000;

void add_qn(CLI::App* cmd, Config& c) {
  cmd->add_option("--q", c.q, "Field size, an odd prime power")->required();
  cmd->add_option("--n", c.n, "Even rank n >= 2")->required();
}

void add_format(CLI::App* cmd, Config& c, std::vector<std::string> allowed) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

int cmd_decompose(const Config& c, std::ostream& out) {
  const QContext ctx(c.q);
  const Subgroup s = parse_subgroup(c.subgroup);
  auto single = [&] {
    const MultiPartition label = parse_label(ctx, c.n, c.label);
    DecompositionReport r{s, ctx, c.n, {}, std::nullopt, 0};
    const std::int64_t m = mult_irr(label, s);
    ReportRow row{label, m, std::nullopt};
    if (c.degrees) {
      row.degree = degree(label);
      r.sum_mult_times_degree = BigInt(m) * *row.degree;
    }
    r.sum_mult_squared = BigInt(m) * m;
    r.rows.push_back(std::move(row));
    return r;
  };
  DecomposeOptions opts;
  opts.include_zeros = c.include_zeros;
  opts.with_degrees = c.degrees;
  opts.unipotent_only = c.unipotent_only;
  const DecompositionReport report = c.label.empty() ? decompose(ctx, c.n, s, opts) : single();
  if (c.format == "json")
    out << to_json(report).dump(2) << '\n';
  else if (c.format == "csv")
    out << render_csv(report);
  else
    out << render_table(report);
  return kExitOk;
}

int cmd_verify_identities(const Config& c, std::ostream& out) {
  const int max_size = c.max_size > 0 ? c.max_size : (c.tier == "slow" ? 9 : 7);
  const auto results = verify_identities(max_size);
  std::size_t failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results)
      rows.push_back({{"identity", r.name}, {"nu", to_string(r.nu)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
    out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"max_size", max_size},
                          {"results", rows},
                          {"checked", results.size()},
                          {"failures", failures}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& r : results)
      out << r.name << ' ' << to_string(r.nu) << " lhs=" << r.lhs << " rhs=" << r.rhs << ' '
          << (r.pass ? "PASS" : "FAIL") << '\n';
    out << "checked " << results.size() << ", failures " << failures << '\n';
  }
  return failures == 0 ? kExitOk : kExitInvariant;
}

int cmd_cross_check(const Config& c, std::ostream& out) {
  const QContext ctx(c.q);
  const std::size_t limit = c.tier == "slow" ? 0 : kFastCrossCheckLabels;
  const CrossCheckSummary s = cross_check(ctx, c.n, limit);
  if (c.format == "json") {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& d : s.disagreements) {
      nlohmann::json j{{"label", to_string(d.label)},
                       {"subgroup", to_string(d.subgroup)},
                       {"formula", d.formula},
                       {"transition", d.transition}};
      j["involution"] = d.involution ? nlohmann::json(*d.involution) : nlohmann::json(nullptr);
      bad.push_back(std::move(j));
    }
    out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"q", s.q},
                          {"n", s.n},
                          {"tier", c.tier},
                          {"labels_total", s.labels_total},
                          {"labels_checked", s.labels_checked},
                          {"comparisons", s.comparisons},
                          {"disagreements", bad}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& d : s.disagreements)
      out << "DISAGREE " << to_string(d.subgroup) << ' ' << to_string(d.label) << " formula=" << d.formula
          << " transition=" << d.transition
          << " involution=" << (d.involution ? std::to_string(*d.involution) : std::string("-")) << '\n';
    out << "q = " << s.q << ", n = " << s.n << ": checked " << s.labels_checked << " of " << s.labels_total
        << " labels, " << s.comparisons << " comparisons, " << s.disagreements.size() << " disagreements\n";
  }
  return s.disagreements.empty() ? kExitOk : kExitInvariant;
}

int cmd_orders(const Config& c, std::ostream& out) {
  const GroupOrders o = orders(c.q, c.n);
  if (c.format == "json")
    out << to_json(o).dump(2) << '\n';
  else
    out << render_table(o);
  return kExitOk;
}

int cmd_dcosets(const Config& c, std::ostream& out) {
  const Subgroup h1 = parse_subgroup(c.h1);
  const Subgroup h2 = parse_subgroup(c.h2.empty() ? c.h1 : c.h2);
  const std::uint64_t count = double_cosets(c.q, c.n, h1, h2);
  if (c.format == "json")
    out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"q", c.q},
                          {"n", c.n},
                          {"h1", to_string(h1)},
                          {"h2", to_string(h2)},
                          {"double_cosets", count}}
               .dump(2)
        << '\n';
  else
    out << to_string(h1) << " \\ PGL_" << c.n << "(" << c.q << ") / " << to_string(h2) << ": " << count
        << " double cosets\n";
  return kExitOk;
}

int cmd_forms(const Config& c, std::ostream& out) {
  const auto orbits = enumerate_forms(c.q, c.n);
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& o : orbits)
      rows.push_back({{"kind", to_string(o.kind)},
                      {"size", o.size},
                      {"stabilizer_order", o.stabilizer_order},
                      {"representative", o.representative}});
    out << nlohmann::json{{"schema_version", kReportSchemaVersion}, {"q", c.q}, {"n", c.n}, {"orbits", rows}}.dump(2)
        << '\n';
  } else {
    for (const auto& o : orbits)
      out << to_string(o.kind) << ": orbit size " << o.size << ", stabilizer order " << o.stabilizer_order << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose Ind(1) from PGSp_n and PGO_n^+- to PGL_n(F_q)", "pglind"};
  app.require_subcommand(1);
  Config c;

  auto* dec = app.add_subcommand("decompose", "Multiplicities of every irreducible in Ind(1)");
  add_qn(dec, c);
  dec->add_option("--subgroup", c.subgroup, "pgsp, pgo+ or pgo-")->required();
  dec->add_option("--label", c.label, "A single label, e.g. \"0/1:[2,1] + 1/2:[1]\"");
  add_format(dec, c, {"table", "json", "csv"});
  dec->add_flag("--include-zeros", c.include_zeros, "Also list labels with multiplicity 0");
  dec->add_flag("--degrees", c.degrees, "Add the degree column and sum_md");
  dec->add_flag("--unipotent-only", c.unipotent_only, "Only unipotent labels");

  auto* ver = app.add_subcommand("verify-identities", "Check the involution identities for small partitions");
  ver->add_option("--max-size", c.max_size, "Largest |nu| (default 7, or 9 in the slow tier)");
  add_format(ver, c, {"table", "json"});

  auto* cross = app.add_subcommand("cross-check", "Compare the three multiplicity routes on every label");
  add_qn(cross, c);
  add_format(cross, c, {"table", "json"});

  auto* ord = app.add_subcommand("orders", "Group orders and indices");
  add_qn(ord, c);
  add_format(ord, c, {"table", "json"});

  auto* dco = app.add_subcommand("dcosets", "Brute-force double coset count (prime q)");
  add_qn(dco, c);
  dco->add_option("--h1", c.h1, "Left subgroup (default pgo+)");
  dco->add_option("--h2", c.h2, "Right subgroup (default: same as --h1)");
  add_format(dco, c, {"table", "json"});

  auto* frm = app.add_subcommand("forms", "Orbits of PGL_n on form classes (prime q)");
  add_qn(frm, c);
  add_format(frm, c, {"table", "json"});

  for (auto* cmd : {dec, ver, cross}) {
    cmd->add_option("--tier", c.tier, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
    cmd->add_option("--cache", c.cache, std::string("Character cache file (overrides $") + kCacheEnvVar + ")");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  std::string cache = c.cache;
  if (cache.empty())
    if (const char* env = std::getenv(kCacheEnvVar)) cache = env;

  try {
    if (!cache.empty() && std::filesystem::exists(cache)) CharacterCache::global().load(cache);
    int code = kExitOk;
    if (dec->parsed())
      code = cmd_decompose(c, out);
    else if (ver->parsed())
      code = cmd_verify_identities(c, out);
    else if (cross->parsed())
      code = cmd_cross_check(c, out);
    else if (ord->parsed())
      code = cmd_orders(c, out);
    else if (dco->parsed())
      code = cmd_dcosets(c, out);
    else if (frm->parsed())
      code = cmd_forms(c, out);
    if (!cache.empty()) CharacterCache::global().save(cache);
    return code;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace pglind
