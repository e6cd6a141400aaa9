#pragma once

#include <string>

#include <json.hpp>

#include "pinched/series.hpp"
#include "pinched/theorems.hpp"

namespace pinched {

inline constexpr int kSchemaVersion = 1;

nlohmann::json config_json(const PinchConfig& config);
nlohmann::json table_json(const BettiTable& table);
nlohmann::json classification_json(const ClassificationReport& report);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json expected_json(const ExpectedTable& expected);
nlohmann::json rational_function_json(const RationalFunction& f);

/// Macaulay-style table: columns i, rows r = s - i, zeros shown as '.'.
/// With an expected table, claimed cells are tagged: '=' matches, '!' fails,
/// '?' unknown.
std::string table_text(const BettiTable& table, const ExpectedTable* expected = nullptr);
/// i,s,degree,row,value for every scanned cell.
std::string table_csv(const BettiTable& table);

std::string report_text(const VerificationReport& report);
std::string report_csv(const VerificationReport& report, bool header = true);

}  // namespace pinched
