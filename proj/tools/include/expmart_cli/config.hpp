#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expmart/processes/time_change.hpp"
#include "expmart/verify/process_element.hpp"
#include "expmart/verify/tolerances.hpp"

namespace expmart::cli {

/// Malformed or invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { algebra, lemma2, isometry, h1, h2, pde, l2limit };

inline constexpr Suite kAllSuites[] = {Suite::algebra, Suite::lemma2, Suite::isometry, Suite::h1,
                                       Suite::h2,      Suite::pde,    Suite::l2limit};

std::string_view suite_name(Suite s) noexcept;
/// Suite names of the config file ("algebra", ..., "all"); "all" expands.
std::vector<Suite> parse_suites(std::string_view text);
/// Subcommand names ("check-algebra", "lemma2", ..., "all").
std::vector<Suite> suites_for_subcommand(std::string_view name);

struct TimeChangeSpec {
  std::string kind = "identity";  // identity | power | piecewise-linear
  double alpha = 1.0;
  std::vector<std::pair<double, double>> knots;
};

/// User-defined cases for the h1 and h2 suites. When `y` is empty the
/// suites run their presets.
struct CaseSpec {
  std::string y;                  // element template, text format with ';' between terms
  std::string g = "zero";         // zero | constant:<v> | piecewise-linear:<t:v,...>
  std::string g_tilde = "zero";
  std::vector<double> c{0.0};
  std::vector<double> c_tilde{0.0};
  std::vector<double> q;          // h1 variances; empty means h(T)
};

struct RunConfig {
  double horizon = 1.0;
  std::size_t grid = 512;
  std::optional<std::size_t> paths;  // unset: each preset's own default
  std::uint64_t seed = 20050101;
  unsigned workers = 1;
  TimeChangeSpec time_change;
  std::vector<Suite> suites;
  CaseSpec cases;
  verify::Tolerances tolerance;
  std::optional<std::string> preset;
  std::filesystem::path out_dir = ".";
};

/// INI text with sections [run], [time_change], [cases], [tolerance].
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError on non-positive counts, T <= 0, bad time change, etc.
void validate(const RunConfig& config);

processes::TimeChange make_time_change(const TimeChangeSpec& spec, double horizon);
verify::CenteringFunction parse_centering(std::string_view text);
std::vector<double> parse_number_list(std::string_view text);

}  // namespace expmart::cli
