#include "pglind/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace pglind {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::json to_json(const DecompositionReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"label", to_string(row.label)}, {"mult", row.mult}};
    if (row.degree) j["degree"] = big_to_json(*row.degree);
    rows.push_back(std::move(j));
  }
  nlohmann::json totals{{"sum_m2", big_to_json(r.sum_mult_squared)}};
  totals["sum_md"] = r.sum_mult_times_degree ? big_to_json(*r.sum_mult_times_degree) : nlohmann::json(nullptr);
  return {{"schema_version", kReportSchemaVersion},
          {"q", r.ctx.q()},
          {"n", r.n},
          {"subgroup", to_string(r.subgroup)},
          {"rows", rows},
          {"totals", totals}};
}

std::string render_table(const DecompositionReport& r) {
  std::size_t width = 5;
  for (const auto& row : r.rows) width = std::max(width, to_string(row.label).size());
  std::ostringstream out;
  out << "q = " << r.ctx.q() << ", n = " << r.n << ", subgroup = " << to_string(r.subgroup) << '\n';
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  const bool deg = r.sum_mult_times_degree.has_value();
  out << pad("label", width) << "  " << (deg ? pad("mult", 6) + "  degree" : std::string("mult"));
  out << '\n';
  for (const auto& row : r.rows) {
    out << pad(to_string(row.label), width) << "  ";
    if (row.degree)
      out << pad(std::to_string(row.mult), 6) << "  " << row.degree->str();
    else
      out << row.mult;
    out << '\n';
  }
  out << "sum_md = " << (r.sum_mult_times_degree ? r.sum_mult_times_degree->str() : std::string("n/a"))
      << ", sum_m2 = " << r.sum_mult_squared.str() << '\n';
  return out.str();
}

std::string render_csv(const DecompositionReport& r) {
  std::ostringstream out;
  out << "label,mult,degree\n";
  for (const auto& row : r.rows)
    out << '"' << to_string(row.label) << "\"," << row.mult << ',' << (row.degree ? row.degree->str() : "") << '\n';
  out << "# sum_md," << (r.sum_mult_times_degree ? r.sum_mult_times_degree->str() : "") << '\n';
  out << "# sum_m2," << r.sum_mult_squared.str() << '\n';
  return out.str();
}

nlohmann::json to_json(const GroupOrders& o) {
  return {{"schema_version", kReportSchemaVersion},
          {"q", o.q},
          {"n", o.n},
          {"gl", big_to_json(o.gl)},
          {"sp", big_to_json(o.sp)},
          {"o_plus", big_to_json(o.o_plus)},
          {"o_minus", big_to_json(o.o_minus)},
          {"pgl", big_to_json(o.pgl)},
          {"pgsp", big_to_json(o.pgsp)},
          {"pgo_plus", big_to_json(o.pgo_plus)},
          {"pgo_minus", big_to_json(o.pgo_minus)},
          {"index_pgsp", big_to_json(o.index_pgsp)},
          {"index_pgo_plus", big_to_json(o.index_pgo_plus)},
          {"index_pgo_minus", big_to_json(o.index_pgo_minus)}};
}

std::string render_table(const GroupOrders& o) {
  std::ostringstream out;
  out << "q = " << o.q << ", n = " << o.n << '\n';
  const std::pair<const char*, const BigInt*> fields[] = {
      {"gl", &o.gl},           {"sp", &o.sp},
      {"o_plus", &o.o_plus},   {"o_minus", &o.o_minus},
      {"pgl", &o.pgl},         {"pgsp", &o.pgsp},
      {"pgo_plus", &o.pgo_plus}, {"pgo_minus", &o.pgo_minus},
      {"index_pgsp", &o.index_pgsp}, {"index_pgo_plus", &o.index_pgo_plus},
      {"index_pgo_minus", &o.index_pgo_minus}};
  for (const auto& [name, value] : fields) {
    std::string key = name;
    key.resize(16, ' ');
    out << key << value->str() << '\n';
  }
  return out.str();
}

}  // namespace pglind
