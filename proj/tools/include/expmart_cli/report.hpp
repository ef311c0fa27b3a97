#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "expmart_cli/config.hpp"
#include "expmart_cli/runner.hpp"

namespace expmart::cli {

std::string render_csv(const RunResult& result);

/// Everything but "header" is a pure function of the config (workers and
/// the timestamp live in the header).
nlohmann::json render_json(const RunResult& result, const RunConfig& config, const std::string& timestamp);

/// UTC, ISO 8601.
std::string current_timestamp();

/// Writes report.csv and report.json under config.out_dir.
void write_reports(const RunResult& result, const RunConfig& config);

/// Human-readable per-case lines and the failure summary.
void print_summary(const RunResult& result, std::ostream& os);

}  // namespace expmart::cli
