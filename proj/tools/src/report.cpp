#include "expmart_cli/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "expmart/algebra/text_format.hpp"
#include "expmart/processes/path_ensemble.hpp"

namespace expmart::cli {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string num(double v) { return algebra::format_double(v); }

json estimate_json(const std::optional<verify::Estimate>& e) {
  if (!e) return nullptr;
  return {{"mean", e->mean.real()}, {"mean_im", e->mean.imag()}, {"stderr", e->std_error}, {"n", e->n}};
}

}  // namespace

std::string render_csv(const RunResult& result) {
  std::ostringstream os;
  os << "suite,case_id,relation,seed,N,M,T,h_kind,factor1_mean,factor1_mean_im,factor1_stderr,"
        "factor2_mean,factor2_mean_im,factor2_stderr,lhs_product,rhs_exact,slack,allowance,pass,note\n";
  auto est = [&](const std::optional<verify::Estimate>& e) {
    if (!e) return std::string(",,");
    return num(e->mean.real()) + ',' + num(e->mean.imag()) + ',' + num(e->std_error);
  };
  for (const auto& r : result.rows) {
    os << csv_field(r.suite) << ',' << csv_field(r.case_id) << ',' << relation_name(r.relation) << ',' << r.seed
       << ',' << r.n << ',' << r.m << ',' << num(r.horizon) << ',' << csv_field(r.h_kind) << ',' << est(r.factor1)
       << ',' << est(r.factor2) << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.slack) << ','
       << num(r.allowance) << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

json render_json(const RunResult& result, const RunConfig& cfg, const std::string& timestamp) {
  json doc;
  doc["header"] = {{"generated_at", timestamp}, {"workers", cfg.workers}, {"tool", "expmart 0.1.0"}};

  json suites = json::array();
  for (Suite s : cfg.suites) suites.push_back(std::string(suite_name(s)));
  const auto& t = cfg.tolerance;
  doc["run"] = {
      {"seed", cfg.seed},
      {"rng", std::string(processes::rng_algorithm())},
      {"suites", suites},
      {"preset", cfg.preset ? json(*cfg.preset) : json(nullptr)},
      {"horizon", cfg.horizon},
      {"grid", cfg.grid},
      {"paths", cfg.paths ? json(*cfg.paths) : json(nullptr)},
      {"time_change", make_time_change(cfg.time_change, cfg.horizon).describe()},
      {"cases", {{"y", cfg.cases.y}, {"g", cfg.cases.g}, {"g_tilde", cfg.cases.g_tilde},
                 {"c", cfg.cases.c}, {"c_tilde", cfg.cases.c_tilde}, {"q", cfg.cases.q}}},
      {"tolerance",
       {{"sigma", t.sigma},
        {"discretization", t.discretization_factor},
        {"exact_inequality", t.exact_inequality},
        {"exact_relative", t.exact_relative},
        {"inner_product_relative", t.inner_product_relative},
        {"pde_residual", t.pde_residual}}}};

  json cases = json::array();
  for (const auto& r : result.rows) {
    cases.push_back({{"suite", r.suite},
                     {"case_id", r.case_id},
                     {"relation", std::string(relation_name(r.relation))},
                     {"seed", r.seed},
                     {"N", r.n},
                     {"M", r.m},
                     {"T", r.horizon},
                     {"h_kind", r.h_kind},
                     {"factor1", estimate_json(r.factor1)},
                     {"factor2", estimate_json(r.factor2)},
                     {"lhs_product", r.lhs},
                     {"rhs_exact", r.rhs},
                     {"slack", r.slack},
                     {"allowance", r.allowance},
                     {"pass", r.pass},
                     {"note", r.note},
                     {"detail", r.detail}});
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = {{"cases", result.rows.size()},
                    {"failed", result.failures()},
                    {"overflow", result.overflow},
                    {"status", result.status()}};
  return doc;
}

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void write_reports(const RunResult& result, const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream csv(cfg.out_dir / "report.csv");
  csv << render_csv(result);
  std::ofstream js(cfg.out_dir / "report.json");
  js << render_json(result, cfg, current_timestamp()).dump(2) << '\n';
  if (!csv || !js) throw std::runtime_error("cannot write reports to " + cfg.out_dir.string());
}

void print_summary(const RunResult& result, std::ostream& os) {
  for (const auto& r : result.rows) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.suite << '/' << r.case_id << "  lhs=" << num(r.lhs)
       << " rhs=" << num(r.rhs) << " allowance=" << num(r.allowance);
    if (!r.note.empty() && !r.pass) os << "  (" << r.note << ')';
    os << '\n';
  }
  os << result.rows.size() << " cases, " << result.failures() << " failed\n";
  if (result.failures() > 0) {
    os << "failures:\n";
    for (const auto& r : result.rows) {
      if (!r.pass) os << "  " << r.suite << '/' << r.case_id << ": slack=" << num(r.slack) << ' ' << r.note << '\n';
    }
  }
}

}  // namespace expmart::cli
