// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// runtime budget.
//
//   acceptance --cli <path to expmart> --work-dir <dir> [--known-failure N]... [--only N]
//
// Exits 0 when the set of failing criteria equals the --known-failure set.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "expmart/algebra/random_element.hpp"
#include "expmart/algebra/text_format.hpp"
#include "expmart_cli/runner.hpp"

using namespace expmart::cli;
using expmart::algebra::format_double;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Accumulates named conditions; the first failing one is reported.
class Conditions {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && verdict_.pass) {
      verdict_.pass = false;
      verdict_.detail = "failed: " + what;
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  Verdict result() const {
    if (verdict_.pass) return {true, notes_};
    return {false, verdict_.detail + (notes_.empty() ? "" : " | " + notes_)};
  }

 private:
  Verdict verdict_;
  std::string notes_;
};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

RunResult run_preset(Suite suite, std::optional<std::string> preset) {
  RunConfig cfg;
  cfg.suites = {suite};
  cfg.preset = std::move(preset);
  return run_suites(cfg);
}

const ReportRow* find_row(const RunResult& r, const std::string& id) {
  for (const auto& row : r.rows) {
    if (row.case_id == id) return &row;
  }
  return nullptr;
}

std::size_t count_prefix(const RunResult& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& row : r.rows) n += row.case_id.rfind(prefix, 0) == 0;
  return n;
}

bool all_pass(const RunResult& r) { return r.failures() == 0 && !r.rows.empty(); }

// ------------------------------------------------------------------ criteria

Verdict ac1() {
  Conditions c;
  const expmart::algebra::SamplerBounds b;
  c.require(b.max_degree == 8 && b.max_terms == 3 && b.max_exponent == 3.0 &&
                b.variances == std::vector<double>{0.0, 0.5, 1.0, 4.0},
            "sampler bounds");
  const auto r = run_preset(Suite::algebra, "commutators");
  c.require(r.rows.size() == 4, "four commutator rows");
  double worst = 0.0;
  for (const auto& row : r.rows) {
    c.require(row.pass, row.case_id);
    c.require(row.n == 1000, row.case_id + " uses 1000 elements");
    c.require(row.lhs < 1e-12, row.case_id + " residual < 1e-12");
    worst = std::max(worst, row.lhs);
  }
  c.note("worst relative residual " + sci(worst) + " over 4 x 1000 elements");
  return c.result();
}

Verdict ac2() {
  Conditions c;
  const auto r = run_preset(Suite::algebra, "unitarity");
  const auto* unit = find_row(r, "G-unitarity");
  const auto* order = find_row(r, "G-order-four");
  c.require(unit && order, "rows present");
  if (unit && order) {
    c.require(unit->pass && unit->lhs <= 1e-9 && unit->n == 1000, "unitarity within 1e-9 on 1000 pairs");
    c.require(order->pass && order->lhs == 0.0 && order->n == 1000, "G^4 bit-exact on 1000 elements");
    c.note("unitarity defect " + sci(unit->lhs) + ", G^4 defect " + sci(order->lhs));
  }
  return c.result();
}

Verdict ac3() {
  Conditions c;
  const auto r = run_preset(Suite::lemma2, "lemma2");
  c.require(count_prefix(r, "inner-product ") == 9, "nine exact pairs");
  c.require(count_prefix(r, "mc-inner ") == 9, "nine Monte Carlo pairs");
  double worst_exact = 0.0, worst_z = 0.0, worst_constant = 0.0;
  std::size_t constant_rows = 0;
  for (const auto& row : r.rows) {
    c.require(row.pass, row.case_id);
    if (row.case_id.rfind("inner-product ", 0) == 0) {
      c.require(row.lhs <= 1e-12, row.case_id + " within 1e-12");
      worst_exact = std::max(worst_exact, row.lhs);
    }
    if (row.case_id.rfind("mc-inner ", 0) == 0) {
      c.require(row.n == 1'000'000, "N = 1e6");
      // Pairs like E_1 conj(E_-1) = 1/e are constant along every path; their
      // standard error is rounding noise, so report them apart.
      if (!row.factor1) continue;
      if (row.factor1->std_error <= 1e-12 * std::max(1.0, std::abs(row.factor1->mean))) {
        ++constant_rows;
        worst_constant = std::max(worst_constant, row.lhs);
      } else {
        worst_z = std::max(worst_z, row.lhs / row.factor1->std_error);
      }
    }
  }
  c.note("exact defect " + sci(worst_exact) + ", worst MC |diff|/stderr " + sci(worst_z) + ", " +
         std::to_string(constant_rows) + " constant-integrand pairs off by <= " + sci(worst_constant) + " (" +
         std::to_string(r.rows.size()) + " rows incl. cross-time and normalisation)");
  return c.result();
}

Verdict ac4() {
  Conditions c;
  const auto r = run_preset(Suite::l2limit, "l2-limit");
  c.require(r.rows.size() == 3, "three exponents");
  for (const auto& row : r.rows) {
    const double last_ratio = row.detail.value("last_ratio", 0.0);
    const bool decreasing = row.detail.value("decreasing", false);
    c.require(decreasing, row.case_id + " decreasing");
    c.require(std::abs(last_ratio - 0.5) <= 0.05, row.case_id + " ratio 0.5 +- 0.05");
    c.require(row.lhs < 1e-3, row.case_id + " final norm " + sci(row.lhs) + " < 1e-3");
    c.note(row.case_id.substr(9) + ": final " + sci(row.lhs) + ", ratio " + sci(last_ratio));
  }
  return c.result();
}

Verdict ac5() {
  Conditions c;
  const auto r = run_preset(Suite::pde, "pde-residual");
  c.require(r.rows.size() == 4, "four exponents");
  double worst = 0.0;
  for (const auto& row : r.rows) {
    c.require(row.pass && row.lhs <= 1e-6, row.case_id);
    worst = std::max(worst, row.lhs);
  }
  c.note("worst residual " + sci(worst));
  return c.result();
}

Verdict ac6() {
  Conditions c;
  const auto r = run_preset(Suite::h1, std::nullopt);
  const auto* random = find_row(r, "h1-random");
  const auto* eq = find_row(r, "h1-equality Y=1 c=0 c~=0 q=1");
  c.require(random && eq, "rows present");
  c.require(all_pass(r), "every h1 row passes");
  if (random && eq) {
    c.require(random->n == 500 && random->detail.value("failures", 1) == 0, "500 randomized cases pass");
    c.require(std::abs(eq->lhs - eq->rhs) <= 1e-9, "equality |LHS - RHS| <= 1e-9");
    c.require(std::abs(eq->lhs - 1.0) <= 1e-9 && std::abs(eq->rhs - 1.0) <= 1e-9, "both sides equal q = 1");
    c.note("worst relative slack " + sci(random->lhs) + "; equality |LHS - RHS| = " + sci(std::abs(eq->lhs - eq->rhs)));
  }
  return c.result();
}

double h2_tolerance(const ReportRow& row) {
  return row.detail.value("sigma_k", 4.0) * row.detail.value("lhs_stderr", 0.0) + 10.0 / static_cast<double>(row.m);
}

Verdict ac7() {
  Conditions c;
  const auto r = run_preset(Suite::h2, "brownian-equality");
  c.require(r.rows.size() == 1, "one row");
  if (r.rows.size() != 1) return c.result();
  const auto& row = r.rows[0];
  c.require(row.n == 100'000 && row.m == 512 && row.horizon == 1.0 && row.h_kind == "identity", "N, M, T, h");
  const double tol = h2_tolerance(row);
  c.require(std::abs(row.lhs - 0.5) <= tol, "|LHS - 0.5| within 4 stderr + 10/M");
  c.require(std::abs(row.rhs - 0.5) <= 1e-12, "RHS = 0.5");
  c.require(row.pass, "inequality passes");
  c.note("LHS " + format_double(row.lhs) + ", RHS " + format_double(row.rhs) + ", |LHS - 0.5| " +
         sci(std::abs(row.lhs - 0.5)) + " <= " + sci(tol));
  return c.result();
}

Verdict ac8() {
  Conditions c;
  const auto r = run_preset(Suite::h2, "brownian-strict");
  c.require(r.rows.size() == 1, "one row");
  if (r.rows.size() != 1) return c.result();
  const auto& row = r.rows[0];
  const double m = static_cast<double>(row.m);
  c.require(row.n == 100'000 && row.m == 512 && row.horizon == 1.0, "N, M, T");
  const double tol = h2_tolerance(row);
  c.require(std::abs(row.lhs - 1.0) <= tol, "|LHS - 1| within 4 stderr + 10/M");

  // The right side is exact in x and trapezoidal in t; for t^2 the rule
  // overshoots by exactly 1/(6 M^2), and Richardson extrapolation of the
  // emitted M / 2M study removes that term.
  const double third = 1.0 / 3.0;
  const double quad_error = 1.0 / (6.0 * m * m);
  c.require(std::abs(row.rhs - (third + quad_error)) <= 1e-14, "trapezoid RHS = 1/3 + 1/(6 M^2)");
  const auto& ref = row.detail["refinement"];
  const double extrapolated = (4.0 * ref.value("rhs_2M", 0.0) - ref.value("rhs_M", 0.0)) / 3.0;
  c.require(std::abs(extrapolated - third) <= 1e-14, "extrapolated RHS = 1/3");
  c.require(std::abs(row.slack - 2.0 / 3.0) <= tol + quad_error, "slack ~ 2/3");
  c.require(row.pass, "inequality passes");
  c.note("LHS " + format_double(row.lhs) + ", RHS " + format_double(row.rhs) + " (extrapolated " +
         format_double(extrapolated) + "), slack " + format_double(row.slack));
  return c.result();
}

Verdict ac9() {
  Conditions c;
  const auto r = run_preset(Suite::isometry, std::nullopt);
  for (const auto& [id, exact] : {std::pair{"isometry-one", 1.0}, std::pair{"isometry-x", 0.5}}) {
    const auto* row = find_row(r, id);
    c.require(row != nullptr, std::string(id) + " present");
    if (!row) continue;
    const double z = row->detail.value("z_score", 99.0);
    c.require(row->n == 100'000 && row->m == 512, std::string(id) + " N, M");
    c.require(std::abs(row->rhs - exact) <= 1e-12, std::string(id) + " exact side");
    c.require(z <= 4.0, std::string(id) + " z-score <= 4");
    c.note(std::string(id) + " z = " + sci(z));
  }
  return c.result();
}

int run_cli(const fs::path& cli, const std::string& args) {
  const std::string cmd = cli.string() + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict ac10(const fs::path& cli, const fs::path& work) {
  Conditions c;
  const fs::path a = work / "workers1", b = work / "workers3";
  fs::remove_all(a);
  fs::remove_all(b);
  const int sa = run_cli(cli, "all --seed 20050101 --workers 1 --out-dir " + a.string());
  const int sb = run_cli(cli, "all --seed 20050101 --workers 3 --out-dir " + b.string());
  c.require(sa == sb, "same exit status");
  c.require(fs::exists(a / "report.json") && fs::exists(b / "report.json"), "reports written");
  if (!fs::exists(a / "report.json") || !fs::exists(b / "report.json")) return c.result();

  c.require(slurp(a / "report.csv") == slurp(b / "report.csv"), "report.csv byte-identical");
  auto ja = nlohmann::json::parse(slurp(a / "report.json"));
  auto jb = nlohmann::json::parse(slurp(b / "report.json"));
  ja.erase("header");
  jb.erase("header");
  c.require(ja.dump(2) == jb.dump(2), "report.json identical outside the header");
  c.note(std::to_string(ja["cases"].size()) + " rows, exit status " + std::to_string(sa));
  return c.result();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string cli_path;
  std::string work_dir = "acceptance_runs";
  std::vector<int> known;
  std::vector<int> only;
  app.add_option("--cli", cli_path, "path to the expmart binary")->required();
  app.add_option("--work-dir", work_dir, "scratch directory for CLI runs");
  app.add_option("--known-failure", known, "criterion expected to fail");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(work_dir);

  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0: no runtime bound
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "exact commutators", 5.0, ac1},
      {2, "G unitarity and order four", 5.0, ac2},
      {3, "exponential inner products, exact and Monte Carlo", 30.0, ac3},
      {4, "L2 limit of the difference quotient", 1.0, ac4},
      {5, "PDE residual", 5.0, ac5},
      {6, "h1 exact suite", 10.0, ac6},
      {7, "h2 Brownian equality", 60.0, ac7},
      {8, "h2 strict case", 60.0, ac8},
      {9, "Ito isometry", 60.0, ac9},
      {10, "reproducibility across worker counts", 0.0, [&] { return ac10(cli_path, work_dir); }},
  };

  std::set<int> failed;
  for (const auto& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = cr.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = sci(secs) + " s";
    if (cr.budget_s > 0.0) {
      timing += " < " + sci(cr.budget_s) + " s";
      if (secs >= cr.budget_s) {
        v.pass = false;
        v.detail = "over runtime budget; " + v.detail;
      }
    }
    if (!v.pass) failed.insert(cr.id);
    const bool expected = std::find(known.begin(), known.end(), cr.id) != known.end();
    std::cout << "AC" << cr.id << (cr.id < 10 ? "  " : " ") << (v.pass ? "PASS" : "FAIL") << "  " << cr.title
              << " [" << timing << "]  " << v.detail << (expected && !v.pass ? "  (known failure)" : "") << '\n'
              << std::flush;
  }

  std::set<int> expected;
  for (int k : known) {
    if (only.empty() || std::find(only.begin(), only.end(), k) != only.end()) expected.insert(k);
  }
  const std::size_t total = only.empty() ? criteria.size() : only.size();
  std::cout << (total - failed.size()) << "/" << total << " criteria pass\n";
  if (failed != expected) {
    std::cout << "failing set differs from the known failures\n";
    return 1;
  }
  return 0;
}
