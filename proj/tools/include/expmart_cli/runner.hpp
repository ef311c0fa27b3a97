#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expmart/verify/estimate.hpp"
#include "expmart_cli/config.hpp"

namespace expmart::cli {

/// How lhs and rhs are compared:
///   ge:   lhs >= rhs - allowance      (the inequalities)
///   le:   lhs <= rhs + allowance      (residuals and defects)
///   near: |lhs - rhs| <= allowance    (Monte Carlo against a closed form)
enum class Relation { ge, le, near };
std::string_view relation_name(Relation r) noexcept;

/// One report line. slack is always lhs - rhs.
struct ReportRow {
  std::string suite;
  std::string case_id;
  Relation relation = Relation::le;
  std::uint64_t seed = 0;
  std::size_t n = 0;      // paths, or randomized cases for exact suites
  std::size_t m = 0;      // grid steps; 0 when no grid is involved
  double horizon = 0.0;   // 0 when no time axis is involved
  std::string h_kind;
  std::optional<verify::Estimate> factor1;
  std::optional<verify::Estimate> factor2;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double allowance = 0.0;
  bool pass = false;
  std::string note;
  nlohmann::json detail = nlohmann::json::object();
};

struct RunResult {
  std::vector<ReportRow> rows;
  bool overflow = false;
  std::size_t failures() const noexcept;
  /// 0 all pass, 1 a case failed, 3 an evaluation overflowed.
  int status() const noexcept;
};

/// Presets of a suite, in run order.
std::vector<std::string> presets_for(Suite suite);

/// Runs the configured suites. ConfigError for an unknown preset or a
/// preset that belongs to none of the selected suites.
RunResult run_suites(const RunConfig& config);

}  // namespace expmart::cli
