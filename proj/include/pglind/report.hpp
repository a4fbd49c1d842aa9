#pragma once

#include <string>

#include <json.hpp>

#include "pglind/formulas.hpp"
#include "pglind/oracle.hpp"

namespace pglind {

inline constexpr int kReportSchemaVersion = 1;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json big_to_json(const BigInt& v);

nlohmann::json to_json(const DecompositionReport& r);
std::string render_table(const DecompositionReport& r);
std::string render_csv(const DecompositionReport& r);

nlohmann::json to_json(const GroupOrders& o);
std::string render_table(const GroupOrders& o);

}  // namespace pglind
