#include "expmart_cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/random_element.hpp"
#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"
#include "expmart/parallel.hpp"
#include "expmart/processes/path_ensemble.hpp"
#include "expmart/verify/algebra_checks.hpp"
#include "expmart/verify/calculus_checks.hpp"
#include "expmart/verify/evaluate.hpp"
#include "expmart/verify/inequality.hpp"
#include "expmart/verify/stochastic.hpp"

namespace expmart::cli {

using algebra::Complex;
using algebra::Element;
using algebra::Variance;
using nlohmann::json;
using processes::PathEnsemble;
using processes::TimeChange;
using processes::TimeGrid;
using verify::CenteringFunction;
using verify::ProcessElement;

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::ge:
      return "ge";
    case Relation::le:
      return "le";
    case Relation::near:
      return "near";
  }
  return "?";
}

std::size_t RunResult::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; }));
}

int RunResult::status() const noexcept {
  if (overflow) return 3;
  return failures() == 0 ? 0 : 1;
}

std::vector<std::string> presets_for(Suite suite) {
  switch (suite) {
    case Suite::algebra:
      return {"commutators", "unitarity", "identities"};
    case Suite::lemma2:
      return {"lemma2"};
    case Suite::isometry:
      return {"isometry-one", "isometry-x", "isometry-zero"};
    case Suite::h1:
      return {"h1-equality", "h1-examples", "h1-random"};
    case Suite::h2:
      return {"brownian-equality", "brownian-strict", "brownian-zero", "h2-random"};
    case Suite::pde:
      return {"pde-residual"};
    case Suite::l2limit:
      return {"l2-limit"};
  }
  return {};
}

namespace {

constexpr std::size_t kAlgebraCases = 1000;
constexpr std::size_t kH1RandomCases = 500;
constexpr std::size_t kH2RandomCases = 20;
constexpr std::size_t kLemma2Paths = 1'000'000;
constexpr std::size_t kDefaultPaths = 100'000;

std::string format_complex(Complex z) {
  const auto num = [](double v) { return algebra::format_double(v); };
  if (z.imag() == 0.0) return num(z.real());
  std::string im = z.imag() == 1.0 ? "i" : z.imag() == -1.0 ? "-i" : num(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  return num(z.real()) + (z.imag() > 0.0 ? "+" : "") + im;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

class EnsembleCache {
 public:
  explicit EnsembleCache(unsigned workers) : workers_(workers) {}

  const PathEnsemble& get(const TimeChange& h, const TimeGrid& grid, std::size_t n, std::uint64_t seed) {
    std::ostringstream key;
    key.precision(17);
    key << h.describe() << '|' << h.horizon() << '|' << n << '|' << seed;
    for (double t : grid.points()) key << ',' << t;
    auto it = cache_.find(key.str());
    if (it == cache_.end()) {
      it = cache_.emplace(key.str(), std::make_unique<PathEnsemble>(processes::generate(h, grid, n, seed, workers_)))
               .first;
    }
    return *it->second;
  }

 private:
  unsigned workers_;
  std::map<std::string, std::unique_ptr<PathEnsemble>> cache_;
};

class SuiteRunner {
 public:
  SuiteRunner(const RunConfig& cfg, RunResult& out) : cfg_(cfg), out_(out), ensembles_(cfg.workers) {}

  void run(Suite suite, const std::string& preset) {
    try {
      dispatch(suite, preset);
    } catch (const OverflowError& e) {
      out_.overflow = true;
      failure_row(suite, preset, std::string("overflow: ") + e.what());
    } catch (const Error& e) {
      failure_row(suite, preset, std::string("error: ") + e.what());
    }
  }

  void run_custom(Suite suite) {
    try {
      if (suite == Suite::h1) {
        custom_h1();
      } else if (suite == Suite::h2) {
        custom_h2();
      } else if (suite == Suite::isometry) {
        custom_isometry();
      }
    } catch (const OverflowError& e) {
      out_.overflow = true;
      failure_row(suite, "custom", std::string("overflow: ") + e.what());
    } catch (const Error& e) {
      failure_row(suite, "custom", std::string("error: ") + e.what());
    }
  }

 private:
  void dispatch(Suite suite, const std::string& preset) {
    switch (suite) {
      case Suite::algebra:
        return algebra_preset(preset);
      case Suite::lemma2:
        return lemma2();
      case Suite::isometry:
        return isometry_preset(preset);
      case Suite::h1:
        return h1_preset(preset);
      case Suite::h2:
        return h2_preset(preset);
      case Suite::pde:
        return pde();
      case Suite::l2limit:
        return l2limit();
    }
  }

  ReportRow& add(Suite suite, std::string case_id, Relation rel) {
    ReportRow row;
    row.suite = std::string(suite_name(suite));
    row.case_id = std::move(case_id);
    row.relation = rel;
    row.seed = cfg_.seed;
    out_.rows.push_back(std::move(row));
    return out_.rows.back();
  }

  void failure_row(Suite suite, const std::string& case_id, std::string note) {
    auto& row = add(suite, case_id, Relation::le);
    row.pass = false;
    row.note = std::move(note);
  }

  static void finish(ReportRow& row) {
    row.slack = row.lhs - row.rhs;
    switch (row.relation) {
      case Relation::ge:
        row.pass = row.lhs >= row.rhs - row.allowance;
        break;
      case Relation::le:
        row.pass = row.lhs <= row.rhs + row.allowance;
        break;
      case Relation::near:
        row.pass = std::abs(row.lhs - row.rhs) <= row.allowance;
        break;
    }
  }

  static void set_ensemble(ReportRow& row, const PathEnsemble& ens) {
    row.n = ens.n_paths();
    row.m = ens.grid().steps();
    row.horizon = ens.grid().horizon();
    row.h_kind = ens.time_change().describe();
  }

  std::size_t paths(std::size_t fallback) const { return cfg_.paths.value_or(fallback); }

  // Presets on the Brownian reference setting use T = 1 and identity h;
  // N, M and the seed follow the config.
  const PathEnsemble& brownian() {
    return ensembles_.get(TimeChange::identity(1.0), TimeGrid::uniform(1.0, cfg_.grid), paths(kDefaultPaths),
                          cfg_.seed);
  }

  const PathEnsemble& configured() {
    const auto h = make_time_change(cfg_.time_change, cfg_.horizon);
    return ensembles_.get(h, TimeGrid::uniform(cfg_.horizon, cfg_.grid), paths(kDefaultPaths), cfg_.seed);
  }

  // ---------------------------------------------------------------- algebra

  void summary_row(const verify::CheckSummary& s, std::uint64_t seed) {
    auto& row = add(Suite::algebra, s.name, Relation::le);
    row.seed = seed;
    row.n = s.cases;
    row.lhs = s.worst;
    row.rhs = 0.0;
    row.allowance = s.tolerance;
    finish(row);
    row.pass = row.pass && s.pass;
  }

  void algebra_preset(const std::string& preset) {
    const std::uint64_t s = cfg_.seed;
    if (preset == "commutators") {
      std::uint64_t k = 1;
      for (auto which : algebra::kAllCommutators) {
        summary_row(verify::check_commutator(which, s + k, kAlgebraCases), s + k);
        ++k;
      }
    } else if (preset == "unitarity") {
      summary_row(verify::check_unitarity(s + 11, kAlgebraCases), s + 11);
      summary_row(verify::check_order_four(s + 11, kAlgebraCases), s + 11);
      out_.rows.back().note = "same elements as G-unitarity; tolerance 0 means bit-exact";
    } else {
      summary_row(verify::check_product_formula(s + 21, kAlgebraCases), s + 21);
      summary_row(verify::check_adjoint_split(s + 22, kAlgebraCases), s + 22);
      summary_row(verify::check_adjointness(s + 23, kAlgebraCases), s + 23);
      summary_row(verify::check_hermite_eigen(12), s);
      summary_row(verify::check_ladder(12), s);
      summary_row(verify::check_transform_routes(s + 24, kAlgebraCases), s + 24);
      summary_row(verify::check_expectation_routes(s + 25, kAlgebraCases), s + 25);
    }
  }

  // ----------------------------------------------------------------- lemma2

  void mc_row(std::string id, const verify::Estimate& est, Complex exact, const PathEnsemble& ens) {
    auto& row = add(Suite::lemma2, std::move(id), Relation::le);
    set_ensemble(row, ens);
    row.factor1 = est;
    row.lhs = std::abs(est.mean - exact);
    row.rhs = 0.0;
    // A constant integrand has zero sample variance, so the summation
    // rounding of the mean needs its own floor.
    const double floor = cfg_.tolerance.exact_relative * std::max(1.0, std::abs(exact));
    row.allowance = cfg_.tolerance.sigma * est.std_error + floor;
    row.detail = {{"exact", complex_json(exact)},
                  {"estimate", complex_json(est.mean)},
                  {"sigma_k", cfg_.tolerance.sigma},
                  {"rounding_floor", floor}};
    finish(row);
  }

  void skipped_row(std::string id, const OverflowError& e, const PathEnsemble& ens) {
    auto& row = add(Suite::lemma2, std::move(id), Relation::le);
    set_ensemble(row, ens);
    row.pass = true;
    row.note = std::string("skipped: ") + e.what();
  }

  void lemma2() {
    const auto h = TimeChange::identity(1.0);
    const TimeGrid grid({0.0, 0.5, 1.0});
    const auto& ens = ensembles_.get(h, grid, paths(kLemma2Paths), cfg_.seed);
    const Variance q(ens.variance_at(2));
    const Complex values[] = {1.0, -1.0, algebra::kI};

    for (Complex c : values) {
      for (Complex d : values) {
        const std::string pair = "c=" + format_complex(c) + " d=" + format_complex(d);
        const Element ec = Element::exponential(c, q);
        const Element ed = Element::exponential(d, q);

        const Complex exact = std::exp(c * std::conj(d) * q.value());
        const Complex ip = algebra::inner_product(ec, ed);
        auto& row = add(Suite::lemma2, "inner-product " + pair, Relation::le);
        row.lhs = std::abs(ip - exact) / std::abs(exact);
        row.allowance = cfg_.tolerance.exact_relative;
        row.detail = {{"exact", complex_json(exact)}, {"inner_product", complex_json(ip)}, {"q", q.value()}};
        row.note = "relative difference";
        finish(row);

        try {
          const auto est = verify::mc_expectation(algebra::mul(ec, algebra::conjugate(ed)), 2, ens, cfg_.workers);
          mc_row("mc-inner " + pair, est, exact, ens);
        } catch (const OverflowError& e) {
          skipped_row("mc-inner " + pair, e, ens);
        }
        try {
          const auto est = verify::mc_expectation(algebra::mul(ec, ed), 2, ens, cfg_.workers);
          mc_row("mc-product " + pair, est, std::exp(c * d * q.value()), ens);
        } catch (const OverflowError& e) {
          skipped_row("mc-product " + pair, e, ens);
        }
      }
    }

    // <E_{c,s}, E_{d,t}> = exp(c conj(d) h(min(s, t))) across two grid times.
    for (Complex c : values) {
      for (Complex d : values) {
        const std::string id = "mc-cross-time s=0.5 t=1 c=" + format_complex(c) + " d=" + format_complex(d);
        try {
          const verify::CompiledElement fs(Element::exponential(c, Variance(ens.variance_at(1))));
          const verify::CompiledElement ft(Element::exponential(d, Variance(ens.variance_at(2))));
          std::vector<Complex> samples(ens.n_paths());
          parallel_for(ens.n_paths(), cfg_.workers, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) samples[i] = fs(ens.at(i, 1)) * std::conj(ft(ens.at(i, 2)));
          });
          mc_row(id, verify::estimate_mean(samples), algebra::cross_time_inner_product(c, 0.5, d, 1.0, h), ens);
        } catch (const OverflowError& e) {
          skipped_row(id, e, ens);
        }
      }
    }

    const Complex normalisation[] = {1.0, -1.0, algebra::kI, -algebra::kI, Complex{1.0, 1.0}};
    for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
      for (Complex c : normalisation) {
        const std::string id = "mc-normalisation t=" + algebra::format_double(grid[k]) + " c=" + format_complex(c);
        try {
          const auto est =
              verify::mc_expectation(Element::exponential(c, Variance(ens.variance_at(k))), k, ens, cfg_.workers);
          mc_row(id, est, 1.0, ens);
        } catch (const OverflowError& e) {
          skipped_row(id, e, ens);
        }
      }
    }
  }

  // --------------------------------------------------------------- isometry

  void isometry_row(std::string id, const ProcessElement& z, const PathEnsemble& ens, std::string note = {}) {
    const auto rep = verify::verify_isometry(z, ens, cfg_.tolerance, cfg_.workers);
    auto& row = add(Suite::isometry, std::move(id), Relation::near);
    set_ensemble(row, ens);
    row.factor1 = rep.mc;
    row.lhs = rep.mc.mean.real();
    row.rhs = rep.exact;
    row.allowance = rep.sigma_k * rep.mc.std_error + rep.allowance;
    row.note = std::move(note);
    row.detail = {{"z_score", rep.z_score},
                  {"sigma_k", rep.sigma_k},
                  {"discretization_allowance", rep.allowance},
                  {"discrete_exact", rep.discrete},
                  {"integrand", z.description()}};
    finish(row);
    row.pass = rep.pass;
  }

  void isometry_preset(const std::string& preset) {
    const auto& ens = brownian();
    if (preset == "isometry-one") {
      isometry_row(preset, ProcessElement::constant(1.0), ens);
    } else if (preset == "isometry-x") {
      isometry_row(preset, x_process(), ens);
    } else {
      isometry_row(preset, ProcessElement::zero(), ens);
    }
  }

  void custom_isometry() {
    isometry_row("custom", ProcessElement::from_template(algebra::parse_monomial_terms(cfg_.cases.y)), configured());
  }

  // --------------------------------------------------------------------- h1

  void h1_row(std::string id, const Element& y, double c, double c_tilde, std::string note = {}) {
    const auto rep = verify::verify_h1(y, c, c_tilde, cfg_.tolerance);
    auto& row = add(Suite::h1, std::move(id), Relation::ge);
    row.n = 0;
    row.factor1 = rep.factor1;
    row.factor2 = rep.factor2;
    row.lhs = rep.lhs_product;
    row.rhs = rep.rhs;
    row.allowance = rep.allowance;
    row.note = std::move(note);
    row.detail = {{"y", algebra::to_text(y)}, {"c", c}, {"c_tilde", c_tilde}, {"q", y.q()}};
    finish(row);
    row.pass = rep.pass;
  }

  void h1_preset(const std::string& preset) {
    const Variance q(1.0);
    if (preset == "h1-equality") {
      h1_row("h1-equality Y=1 c=0 c~=0 q=1", Element::constant(1.0, q), 0.0, 0.0, "derived equality case");
    } else if (preset == "h1-examples") {
      const Element x = Element::monomial_term(0.0, std::vector<Complex>{0.0, 1.0}, q);
      h1_row("h1-examples Y=X c=0 c~=0 q=1", x, 0.0, 0.0);
      h1_row("h1-examples Y=E_1 c=0 c~=0 q=1", Element::exponential(1.0, q), 0.0, 0.0);
      h1_row("h1-examples Y=0 c=0 c~=0 q=1", Element(q), 0.0, 0.0);
    } else {
      h1_random();
    }
  }

  void h1_random() {
    algebra::SamplerBounds bounds;
    bounds.max_degree = 4;
    bounds.max_terms = 2;
    bounds.max_exponent = 2.0;
    bounds.variances = {0.25, 1.0, 4.0};
    const std::uint64_t seed = cfg_.seed + 101;
    algebra::ElementSampler sampler(seed, bounds);

    std::size_t failures = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    json worst_case;
    for (std::size_t i = 0; i < kH1RandomCases; ++i) {
      const Element y = sampler.draw();
      const double c = sampler.uniform(-2.0, 2.0);
      const double c_tilde = sampler.uniform(-2.0, 2.0);
      const auto rep = verify::verify_h1(y, c, c_tilde, cfg_.tolerance);
      if (!rep.pass) ++failures;
      // Slack relative to the scale of the bound, so cases of very
      // different magnitude compare.
      const double margin = rep.slack / std::max(1.0, rep.rhs);
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_case = {{"y", algebra::to_text(y)}, {"c", c}, {"c_tilde", c_tilde}, {"q", y.q()},
                      {"lhs", rep.lhs_product}, {"rhs", rep.rhs}};
      }
    }
    auto& row = add(Suite::h1, "h1-random", Relation::ge);
    row.seed = seed;
    row.n = kH1RandomCases;
    row.lhs = worst_margin;
    row.rhs = 0.0;
    row.allowance = cfg_.tolerance.exact_inequality;
    row.note = "lhs is the smallest (lhs - rhs) / max(1, rhs) over all cases";
    row.detail = {{"failures", failures}, {"worst_case", worst_case}};
    finish(row);
    row.pass = row.pass && failures == 0;
  }

  void custom_h1() {
    const auto terms = algebra::parse_monomial_terms(cfg_.cases.y);
    std::vector<double> qs = cfg_.cases.q;
    if (qs.empty()) qs.push_back(make_time_change(cfg_.time_change, cfg_.horizon)(cfg_.horizon));
    for (double qv : qs) {
      const Element y = Element::from_monomial_terms(terms, Variance(qv));
      for (double c : cfg_.cases.c) {
        for (double ct : cfg_.cases.c_tilde) {
          h1_row("custom q=" + algebra::format_double(qv) + " c=" + algebra::format_double(c) +
                     " c~=" + algebra::format_double(ct),
                 y, c, ct);
        }
      }
    }
  }

  // --------------------------------------------------------------------- h2

  static ProcessElement x_process() {
    return ProcessElement::from_template({Element::MonomialTerm{0.0, {0.0, 1.0}}});
  }

  void h2_row(std::string id, const ProcessElement& y, const CenteringFunction& g, const CenteringFunction& gt,
              const PathEnsemble& ens, std::string note = {}) {
    const auto rep = verify::verify_h2(y, g, gt, ens, cfg_.tolerance, cfg_.workers);
    auto& row = add(Suite::h2, std::move(id), Relation::ge);
    set_ensemble(row, ens);
    row.factor1 = rep.factor1;
    row.factor2 = rep.factor2;
    row.lhs = rep.lhs_product;
    row.rhs = rep.rhs;
    row.allowance = rep.sigma_k * rep.lhs_stderr + rep.allowance;
    row.note = std::move(note);
    row.detail = {{"y", y.description()},
                  {"g", g.describe()},
                  {"g_tilde", gt.describe()},
                  {"lhs_stderr", rep.lhs_stderr},
                  {"sigma_k", rep.sigma_k},
                  {"discretization_allowance", rep.allowance}};
    if (rep.refinement) {
      const auto& r = *rep.refinement;
      row.detail["refinement"] = {{"rhs_M", r.rhs_coarse},         {"rhs_2M", r.rhs_fine},
                                  {"factor1_M", r.factor1_coarse}, {"factor1_2M", r.factor1_fine},
                                  {"factor2_M", r.factor2_coarse}, {"factor2_2M", r.factor2_fine}};
    }
    finish(row);
    row.pass = rep.pass;
  }

  void h2_preset(const std::string& preset) {
    const auto zero = CenteringFunction::zero();
    if (preset == "brownian-equality") {
      h2_row(preset, ProcessElement::constant(1.0), zero, zero, brownian(), "derived equality case");
    } else if (preset == "brownian-strict") {
      h2_row(preset, x_process(), zero, zero, brownian());
    } else if (preset == "brownian-zero") {
      h2_row(preset, ProcessElement::zero(), zero, zero, brownian());
    } else {
      h2_random();
    }
  }

  // Small exponents and degrees keep the Ito sums' variance moderate at
  // N = 1e5.
  void h2_random() {
    const std::uint64_t seed = cfg_.seed + 201;
    algebra::SamplerBounds bounds;
    bounds.max_degree = 2;
    bounds.max_terms = 2;
    bounds.max_exponent = 0.5;
    algebra::ElementSampler sampler(seed, bounds);
    const auto& ens = brownian();

    auto draw_centering = [&]() {
      switch (static_cast<int>(sampler.uniform(0.0, 3.0))) {
        case 0:
          return CenteringFunction::zero();
        case 1:
          return CenteringFunction::constant(sampler.uniform(-1.0, 1.0));
        default:
          return CenteringFunction::piecewise_linear(
              {{0.0, sampler.uniform(-1.0, 1.0)}, {0.5, sampler.uniform(-1.0, 1.0)}, {1.0, sampler.uniform(-1.0, 1.0)}});
      }
    };

    for (std::size_t i = 0; i < kH2RandomCases; ++i) {
      // The template's coefficients are drawn at q = 1 and reused at every t.
      const auto terms = sampler.draw(Variance(1.0)).monomial_terms();
      const auto g = draw_centering();
      const auto gt = draw_centering();
      h2_row("h2-random #" + std::to_string(i + 1), ProcessElement::from_template(terms), g, gt, ens);
      out_.rows.back().seed = seed;
    }
  }

  void custom_h2() {
    h2_row("custom", ProcessElement::from_template(algebra::parse_monomial_terms(cfg_.cases.y)),
           parse_centering(cfg_.cases.g), parse_centering(cfg_.cases.g_tilde), configured());
  }

  // -------------------------------------------------------------------- pde

  void pde() {
    const auto points = verify::pde_box_points();
    for (Complex c : {Complex{0.0}, Complex{1.0}, algebra::kI, Complex{1.0, 1.0}}) {
      const auto r = verify::verify_pde(c, points);
      auto& row = add(Suite::pde, "pde-residual c=" + format_complex(c), Relation::le);
      row.n = points.size();
      row.lhs = r.max();
      row.allowance = cfg_.tolerance.pde_residual;
      row.detail = {{"max_f", r.max_f}, {"max_g", r.max_g}, {"step", 1e-4}, {"box", "[-2,2]x[0.5,2] 21x16"}};
      finish(row);
    }
  }

  // ---------------------------------------------------------------- l2limit

  void l2limit() {
    constexpr double kFinalBound = 1e-3;
    constexpr double kRatioTarget = 0.5;
    constexpr double kRatioWindow = 0.05;
    const auto rs = verify::dyadic_sequence(1, 12);
    for (Complex c : {Complex{0.0}, Complex{1.0}, algebra::kI}) {
      const auto norms = verify::verify_l2_limit(c, Variance(1.0), rs);
      std::vector<double> ratios;
      bool decreasing = true;
      for (std::size_t k = 1; k < norms.size(); ++k) {
        ratios.push_back(norms[k] / norms[k - 1]);
        decreasing = decreasing && norms[k] < norms[k - 1];
      }
      const double last_ratio = ratios.back();
      auto& row = add(Suite::l2limit, "l2-limit c=" + format_complex(c) + " q=1", Relation::le);
      row.n = norms.size();
      row.lhs = norms.back();
      row.allowance = kFinalBound;
      row.note = "lhs is the norm at r = 2^-12; pass also needs decreasing norms and last ratio 0.5 +- 0.05";
      row.detail = {{"r", rs}, {"norms", norms}, {"ratios", ratios}, {"decreasing", decreasing}, {"last_ratio", last_ratio}};
      finish(row);
      row.pass = row.pass && decreasing && std::abs(last_ratio - kRatioTarget) <= kRatioWindow;
    }
  }

  const RunConfig& cfg_;
  RunResult& out_;
  EnsembleCache ensembles_;
};

}  // namespace

RunResult run_suites(const RunConfig& cfg) {
  if (cfg.preset) {
    const bool known = std::any_of(cfg.suites.begin(), cfg.suites.end(), [&](Suite s) {
      const auto p = presets_for(s);
      return std::find(p.begin(), p.end(), *cfg.preset) != p.end();
    });
    if (!known) throw ConfigError("preset '" + *cfg.preset + "' does not belong to the selected suites");
  }

  RunResult result;
  SuiteRunner runner(cfg, result);
  for (Suite s : cfg.suites) {
    const bool custom = !cfg.cases.y.empty() && (s == Suite::h1 || s == Suite::h2 || s == Suite::isometry);
    if (custom && !cfg.preset) {
      runner.run_custom(s);
      continue;
    }
    for (const auto& p : presets_for(s)) {
      if (!cfg.preset || *cfg.preset == p) runner.run(s, p);
    }
  }
  return result;
}

}  // namespace expmart::cli
