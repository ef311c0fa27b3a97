#include "expmart_cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"

namespace expmart::cli {

namespace pt = boost::property_tree;

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::algebra:
      return "algebra";
    case Suite::lemma2:
      return "lemma2";
    case Suite::isometry:
      return "isometry";
    case Suite::h1:
      return "h1";
    case Suite::h2:
      return "h2";
    case Suite::pde:
      return "pde";
    case Suite::l2limit:
      return "l2limit";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, end == std::string_view::npos ? end : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

double to_double(std::string_view token, std::string_view what) {
  const std::string t = trim(token);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number for " + std::string(what) + ": '" + t + "'");
  }
  return v;
}

template <class Int>
Int to_count(std::string_view token, std::string_view what) {
  const std::string t = trim(token);
  Int v{};
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError("invalid integer for " + std::string(what) + ": '" + t + "'");
  }
  return v;
}

std::vector<std::pair<double, double>> parse_knots(std::string_view text, std::string_view what) {
  std::vector<std::pair<double, double>> knots;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError(std::string(what) + " knots must look like t:v");
    knots.emplace_back(to_double(item.substr(0, colon), what), to_double(item.substr(colon + 1), what));
  }
  return knots;
}

}  // namespace

std::vector<Suite> parse_suites(std::string_view text) {
  std::vector<Suite> out;
  std::set<Suite> seen;
  for (const auto& name : split(text, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      for (auto s : kAllSuites) {
        if (seen.insert(s).second) out.push_back(s);
      }
      continue;
    }
    bool found = false;
    for (auto s : kAllSuites) {
      if (suite_name(s) == name) {
        if (seen.insert(s).second) out.push_back(s);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown suite '" + name + "'");
  }
  return out;
}

std::vector<Suite> suites_for_subcommand(std::string_view name) {
  if (name == "check-algebra") return {Suite::algebra};
  if (name == "algebra") throw ConfigError("unknown subcommand 'algebra' (use check-algebra)");
  return parse_suites(name);
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) out.push_back(to_double(item, "number list"));
  }
  return out;
}

verify::CenteringFunction parse_centering(std::string_view text) {
  const std::string t = trim(text);
  try {
    if (t == "zero" || t.empty()) return verify::CenteringFunction::zero();
    if (t.starts_with("constant:")) return verify::CenteringFunction::constant(to_double(t.substr(9), "centring"));
    if (t.starts_with("piecewise-linear:")) {
      return verify::CenteringFunction::piecewise_linear(parse_knots(t.substr(17), "centring"));
    }
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("centring must be zero, constant:<v> or piecewise-linear:<t:v,...>; got '" + t + "'");
}

processes::TimeChange make_time_change(const TimeChangeSpec& spec, double horizon) {
  try {
    if (spec.kind == "identity") return processes::TimeChange::identity(horizon);
    if (spec.kind == "power") return processes::TimeChange::power(spec.alpha, horizon);
    if (spec.kind == "piecewise-linear") return processes::TimeChange::piecewise_linear(spec.knots);
  } catch (const Error& e) {
    throw ConfigError(std::string("time_change: ") + e.what());
  }
  throw ConfigError("time_change.kind must be identity, power or piecewise-linear");
}

RunConfig parse_config(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream is{std::string(text)};
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }

  static const std::set<std::string> known_sections{"run", "time_change", "cases", "tolerance"};
  static const std::map<std::string, std::set<std::string>> known_keys{
      {"run", {"horizon", "grid", "paths", "seed", "workers", "suite", "preset", "out_dir"}},
      {"time_change", {"kind", "alpha", "knots"}},
      {"cases", {"y", "g", "g_tilde", "c", "c_tilde", "q"}},
      {"tolerance",
       {"sigma", "discretization", "exact_inequality", "exact_relative", "inner_product_relative",
        "pde_residual"}}};
  for (const auto& [section, body] : tree) {
    if (!known_sections.contains(section)) throw ConfigError("unknown config section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!known_keys.at(section).contains(key)) {
        throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      }
    }
  }

  RunConfig cfg;
  auto get = [&](const char* path) { return tree.get_optional<std::string>(path); };

  if (auto v = get("run.horizon")) cfg.horizon = to_double(*v, "run.horizon");
  if (auto v = get("run.grid")) cfg.grid = to_count<std::size_t>(*v, "run.grid");
  if (auto v = get("run.paths")) cfg.paths = to_count<std::size_t>(*v, "run.paths");
  if (auto v = get("run.seed")) cfg.seed = to_count<std::uint64_t>(*v, "run.seed");
  if (auto v = get("run.workers")) cfg.workers = to_count<unsigned>(*v, "run.workers");
  if (auto v = get("run.suite")) cfg.suites = parse_suites(*v);
  if (auto v = get("run.preset")) cfg.preset = trim(*v);
  if (auto v = get("run.out_dir")) cfg.out_dir = trim(*v);

  if (auto v = get("time_change.kind")) cfg.time_change.kind = trim(*v);
  if (auto v = get("time_change.alpha")) cfg.time_change.alpha = to_double(*v, "time_change.alpha");
  if (auto v = get("time_change.knots")) cfg.time_change.knots = parse_knots(*v, "time_change");

  if (auto v = get("cases.y")) cfg.cases.y = trim(*v);
  if (auto v = get("cases.g")) cfg.cases.g = trim(*v);
  if (auto v = get("cases.g_tilde")) cfg.cases.g_tilde = trim(*v);
  if (auto v = get("cases.c")) cfg.cases.c = parse_number_list(*v);
  if (auto v = get("cases.c_tilde")) cfg.cases.c_tilde = parse_number_list(*v);
  if (auto v = get("cases.q")) cfg.cases.q = parse_number_list(*v);

  auto& tol = cfg.tolerance;
  if (auto v = get("tolerance.sigma")) tol.sigma = to_double(*v, "tolerance.sigma");
  if (auto v = get("tolerance.discretization")) tol.discretization_factor = to_double(*v, "tolerance.discretization");
  if (auto v = get("tolerance.exact_inequality")) tol.exact_inequality = to_double(*v, "tolerance.exact_inequality");
  if (auto v = get("tolerance.exact_relative")) tol.exact_relative = to_double(*v, "tolerance.exact_relative");
  if (auto v = get("tolerance.inner_product_relative")) {
    tol.inner_product_relative = to_double(*v, "tolerance.inner_product_relative");
  }
  if (auto v = get("tolerance.pde_residual")) tol.pde_residual = to_double(*v, "tolerance.pde_residual");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate(const RunConfig& cfg) {
  if (!(cfg.horizon > 0.0)) throw ConfigError("run.horizon must be > 0");
  if (cfg.grid == 0) throw ConfigError("run.grid must be positive");
  if (cfg.paths && *cfg.paths < 2) throw ConfigError("run.paths must be at least 2");
  if (cfg.workers == 0) throw ConfigError("run.workers must be positive");
  const auto h = make_time_change(cfg.time_change, cfg.horizon);
  if (cfg.time_change.kind == "piecewise-linear" && std::abs(h.horizon() - cfg.horizon) > 1e-12 * cfg.horizon) {
    throw ConfigError("time_change knots must end at run.horizon");
  }
  try {
    h.validate_on(processes::TimeGrid::uniform(cfg.horizon, cfg.grid));
  } catch (const Error& e) {
    throw ConfigError(std::string("time_change: ") + e.what());
  }
  const auto& tol = cfg.tolerance;
  for (double v : {tol.sigma, tol.discretization_factor, tol.exact_inequality, tol.exact_relative,
                   tol.inner_product_relative, tol.pde_residual}) {
    if (!(v >= 0.0)) throw ConfigError("tolerances must be non-negative");
  }
  if (!cfg.cases.y.empty()) {
    try {
      (void)algebra::parse_monomial_terms(cfg.cases.y);
    } catch (const Error& e) {
      throw ConfigError(std::string("cases.y: ") + e.what());
    }
  }
  (void)parse_centering(cfg.cases.g);
  (void)parse_centering(cfg.cases.g_tilde);
  for (double q : cfg.cases.q) {
    if (!(q >= 0.0)) throw ConfigError("cases.q values must be >= 0");
  }
}

}  // namespace expmart::cli
