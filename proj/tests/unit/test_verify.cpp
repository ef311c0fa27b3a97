#include <cmath>
#include <limits>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/random_element.hpp"
#include "expmart/errors.hpp"
#include "expmart/verify/calculus_checks.hpp"
#include "expmart/verify/evaluate.hpp"
#include "expmart/verify/inequality.hpp"
#include "expmart/verify/stochastic.hpp"
#include "helpers.hpp"

using namespace expmart;
using namespace expmart::verify;
using algebra::Element;
using algebra::Variance;
using processes::PathEnsemble;
using processes::TimeChange;
using processes::TimeGrid;
using test::close;
using test::poly;

namespace {

const double kE = std::exp(1.0);

ProcessElement x_process() { return ProcessElement::from_template({Element::MonomialTerm{0.0, poly({0.0, 1.0})}}); }

const PathEnsemble& terminal_ensemble() {
  static const PathEnsemble ens = processes::generate(TimeChange::identity(1.0), TimeGrid({0.0, 1.0}), 1'000'000, 4242);
  return ens;
}

const PathEnsemble& brownian_512() {
  static const PathEnsemble ens =
      processes::generate(TimeChange::identity(1.0), TimeGrid::uniform(1.0, 512), 100'000, 777);
  return ens;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("pathwise evaluation") {
  const Variance q(1.0);
  CHECK(close(evaluate_element(Element::constant(1.0, q), 3.7), 1.0));
  CHECK(close(evaluate_element(Element::exponential(1.0, q), 1.0), std::exp(0.5)));
  CHECK(close(evaluate_element(Element::exponential(1.0, q), 0.0), std::exp(-0.5)));
  CHECK(close(evaluate_element(Element::monomial_term(0.0, poly({0.0, 1.0}), q), -2.5), -2.5));
  CHECK_THROWS_AS(evaluate_element(Element::exponential(2.0, q), 400.0), OverflowError);
  try {
    evaluate_element(Element::exponential(2.0, q), 400.0);
  } catch (const OverflowError& e) {
    CHECK(e.exponent() == algebra::Complex{2.0});
    CHECK(e.x() == 400.0);
  }

  algebra::ElementSampler s(31);
  for (int i = 0; i < 50; ++i) {
    const Element f = s.draw();
    const CompiledElement compiled(f);
    double x = s.uniform(-2.0, 2.0);
    // Direct sum over the monomial form as an independent route.
    algebra::Complex direct{};
    for (const auto& t : f.monomial_terms()) {
      algebra::Complex p{}, xn = 1.0;
      for (auto a : t.poly) {
        p += a * xn;
        xn *= x;
      }
      direct += p * std::exp(t.exponent * x - 0.5 * t.exponent * t.exponent * f.q());
    }
    CHECK(close(compiled(x), direct, 1e-9));
  }
}

TEST_CASE("estimates") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.1 * static_cast<double>(i);
  CHECK(pairwise_sum(std::span<const double>(v)) == doctest::Approx(49950.0).epsilon(1e-15));

  const std::vector<double> data{1.0, 2.0, 3.0, 4.0};
  const auto e = estimate_mean(std::span<const double>(data));
  CHECK(e.mean.real() == 2.5);
  CHECK(e.std_error == doctest::Approx(std::sqrt((5.0 / 3.0) / 4.0)));
  CHECK(e.n == 4);
  CHECK_FALSE(e.is_exact());
  CHECK(Estimate::exact(2.0).is_exact());
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(estimate_mean(std::span<const double>(one)), InvalidInput);

  // Equal columns: sqrt(E[a] E[a]) = E[a] with the plain standard error.
  const auto r = product_root(data, data);
  CHECK(r.value == doctest::Approx(2.5));
  CHECK(r.std_error == doctest::Approx(e.std_error));
}

TEST_CASE("Monte Carlo expectations") {
  const auto& ens = terminal_ensemble();
  const Variance q(1.0);
  const auto e1 = mc_expectation(Element::exponential(1.0, q), 1, ens);
  CHECK(std::abs(e1.mean - 1.0) <= 4.0 * e1.std_error);
  const auto e11 = mc_expectation(algebra::mul(Element::exponential(1.0, q), Element::exponential(1.0, q)), 1, ens);
  CHECK(std::abs(e11.mean - kE) <= 4.0 * e11.std_error);

  const auto z = mc_expectation(Element(q), 1, ens);
  CHECK(z.mean == algebra::Complex{});
  CHECK(z.std_error == 0.0);
  CHECK(z.n == ens.n_paths());

  CHECK_THROWS_AS(mc_expectation(Element::constant(1.0, Variance(2.0)), 1, ens), ContractViolation);
  CHECK_THROWS_AS(mc_expectation(ProcessElement::constant(1.0), 0.5, ens), RangeError);
}

TEST_CASE("exact and Monte Carlo expectations agree") {
  const auto& ens = terminal_ensemble();
  algebra::SamplerBounds bounds;
  bounds.max_degree = 3;
  bounds.max_terms = 2;
  bounds.max_exponent = 1.0;
  bounds.variances = {1.0};
  algebra::ElementSampler s(37, bounds);
  for (int i = 0; i < 20; ++i) {
    const Element f = s.draw();
    const auto est = mc_expectation(f, 1, ens);
    CAPTURE(i);
    CHECK(std::abs(est.mean - algebra::expectation(f)) <= 4.0 * est.std_error + 1e-12);
  }
}

TEST_CASE("Ito sums") {
  const auto h = TimeChange::identity(1.0);
  const auto ens = processes::generate(h, TimeGrid::uniform(1.0, 32), 200, 5);
  const auto one = ito_integral(ProcessElement::constant(1.0), ens);
  const auto zero = ito_integral(ProcessElement::zero(), ens);
  for (std::size_t i = 0; i < ens.n_paths(); ++i) {
    // Telescoping: exact up to rounding of the running sum.
    CHECK(std::abs(one[i] - ens.at(i, 32)) <= 1e-14 * 32);
    CHECK(zero[i] == algebra::Complex{});
  }

  const auto grid = TimeGrid::uniform(1.0, 8);
  CHECK(discrete_isometry(ProcessElement::constant(1.0), h, grid) == doctest::Approx(1.0));
  // Left-point sum of E[X_t^2] dt = sum t_k / 8 = 7/16.
  CHECK(discrete_isometry(x_process(), h, grid) == doctest::Approx(7.0 / 16.0));
  const std::vector<double> lin{0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
  CHECK(trapezoid_dh(lin, h, grid) == doctest::Approx(0.5));
}

TEST_CASE("Ito isometry") {
  const auto& ens = brownian_512();
  const auto r1 = verify_isometry(ProcessElement::constant(1.0), ens);
  CHECK(r1.exact == doctest::Approx(1.0));
  CHECK(r1.z_score <= 4.0);
  CHECK(r1.pass);
  const auto rx = verify_isometry(x_process(), ens);
  CHECK(rx.exact == doctest::Approx(0.5));
  CHECK(rx.z_score <= 4.0);
  CHECK(rx.pass);
  const auto r0 = verify_isometry(ProcessElement::zero(), ens);
  CHECK(r0.exact == 0.0);
  CHECK(r0.mc.mean == algebra::Complex{});
  CHECK(r0.pass);
}

TEST_CASE("fixed-time inequality") {
  const Variance q(1.0);
  const auto eq = verify_h1(Element::constant(1.0, q), 0.0, 0.0);
  CHECK(eq.lhs_product == doctest::Approx(1.0));
  CHECK(eq.rhs == doctest::Approx(1.0));
  CHECK(std::abs(eq.slack) <= 1e-9);
  CHECK(eq.pass);

  const auto x = verify_h1(Element::monomial_term(0.0, poly({0.0, 1.0}), q), 0.0, 0.0);
  CHECK(x.factor1.mean.real() == doctest::Approx(3.0));
  CHECK(x.factor2.mean.real() == doctest::Approx(3.0));
  CHECK(x.lhs_product == doctest::Approx(3.0));
  CHECK(x.rhs == doctest::Approx(1.0));
  CHECK(x.factor1.is_exact());

  const auto e = verify_h1(Element::exponential(1.0, q), 0.0, 0.0);
  CHECK(e.rhs == doctest::Approx(kE));
  CHECK(e.lhs_product >= e.rhs);
  CHECK(e.pass);

  // The bound scales with q: at q = 4, Y = 1 gives equality at 4.
  const auto q4 = verify_h1(Element::constant(1.0, Variance(4.0)), 0.0, 0.0);
  CHECK(q4.lhs_product == doctest::Approx(4.0));
  CHECK(q4.rhs == doctest::Approx(4.0));
  CHECK_THROWS_AS(verify_h1(Element::constant(1.0, q), std::numeric_limits<double>::quiet_NaN(), 0.0),
                  InvalidInput);
}

TEST_CASE("stochastic-integral inequality") {
  const auto h = TimeChange::identity(1.0);
  const auto grid = TimeGrid::uniform(1.0, 512);
  CHECK(h2_rhs(ProcessElement::constant(1.0), h, grid) == doctest::Approx(0.5).epsilon(1e-15));
  // Trapezoid of t^2: 1/3 + 1/(6 M^2).
  CHECK(h2_rhs(x_process(), h, grid) == doctest::Approx(1.0 / 3.0 + 1.0 / (6.0 * 512.0 * 512.0)).epsilon(1e-14));

  const auto& ens = brownian_512();
  const auto zero = CenteringFunction::zero();
  const auto r = verify_h2(ProcessElement::zero(), zero, zero, ens);
  CHECK(r.lhs_product == 0.0);
  CHECK(r.rhs == 0.0);
  CHECK(r.pass);
  REQUIRE(r.refinement.has_value());

  const auto eq = verify_h2(ProcessElement::constant(1.0), zero, zero, ens);
  CHECK(eq.pass);
  CHECK(std::abs(eq.lhs_product - 0.5) <= 4.0 * eq.lhs_stderr + 10.0 / 512.0);
  CHECK(eq.refinement->rhs_fine == doctest::Approx(0.5));
}

TEST_CASE("centring functions and process elements") {
  CHECK(CenteringFunction::zero()(0.3) == 0.0);
  CHECK(CenteringFunction::constant(1.5)(0.9) == 1.5);
  const auto pl = CenteringFunction::piecewise_linear({{0.0, 0.0}, {1.0, 2.0}});
  CHECK(pl(0.25) == doctest::Approx(0.5));
  CHECK(pl(2.0) == doctest::Approx(2.0));
  CHECK(pl.describe() == "piecewise-linear:0:0,1:2");
  CHECK(CenteringFunction::constant(1.5).describe() == "constant:1.5");
  CHECK_THROWS_AS(CenteringFunction::constant(std::numeric_limits<double>::infinity()), InvalidInput);

  const auto h = TimeChange::identity(1.0);
  const auto y = x_process();
  CHECK(y.at(0.5, h).q() == 0.5);
  const Element centred = y.centred(CenteringFunction::constant(2.0)).at(0.5, h);
  CHECK(algebra::approx_equal(centred, algebra::apply_X(y.at(0.5, h)) - 2.0 * y.at(0.5, h)));
  CHECK(algebra::approx_equal(y.transformed().at(0.5, h), algebra::apply_G(y.at(0.5, h))));

  const ProcessElement wrong([](double, Variance) { return Element::constant(1.0, Variance(9.0)); }, "wrong");
  CHECK_THROWS_AS(wrong.at(0.5, Variance(0.5)), ContractViolation);
}

TEST_CASE("PDE residual") {
  const auto pts = pde_box_points();
  CHECK(pts.size() == 21 * 16);
  // f = 1 exactly; g = x only sees rounding in the second difference.
  CHECK(verify_pde(0.0, pts).max_f == 0.0);
  CHECK(verify_pde(0.0, pts).max_g <= 1e-6);
  CHECK(verify_pde(1.0, pts).max() <= 1e-6);
  CHECK(verify_pde(algebra::kI, pts).max() <= 1e-6);
  const std::vector<PdePoint> low{{0.0, 5e-5}};
  CHECK_THROWS_AS(verify_pde(1.0, low), InvalidInput);
}

TEST_CASE("L2 limit") {
  const Variance q(1.0);
  const std::vector<double> r10{std::ldexp(1.0, -10)};
  CHECK(verify_l2_limit(0.0, q, r10)[0] <= 1e-2);

  const auto rs = dyadic_sequence(1, 12);
  CHECK(rs.size() == 12);
  const auto n1 = verify_l2_limit(1.0, q, rs);
  for (std::size_t k = 1; k < n1.size(); ++k) CHECK(n1[k] < n1[k - 1]);
  // Leading term (r/2) ||H_2 E_1||, with ||H_2 E_1||^2 = 34 e at q = 1.
  CHECK(n1.back() == doctest::Approx(0.5 * rs.back() * std::sqrt(34.0 * kE)).epsilon(1e-3));

  // Against the direct difference quotient where it is well conditioned.
  for (algebra::Complex c : {algebra::Complex{0.0}, algebra::Complex{1.0}, algebra::kI}) {
    const Element ec = Element::exponential(c, q);
    const double r = 0.5;
    const Element direct = algebra::Complex{1.0 / r} * (algebra::mul(Element::exponential(r, q), ec) - ec) -
                           algebra::apply_X(ec);
    const std::vector<double> one{r};
    CHECK(verify_l2_limit(c, q, one)[0] == doctest::Approx(algebra::norm(direct)).epsilon(1e-12));
  }

  const auto tiny = verify_l2_limit(1.0, Variance(1e-10), rs);
  for (double n : tiny) CHECK(n < 1e-9);
  CHECK_THROWS_AS(verify_l2_limit(1.0, Variance(0.0), rs), InvalidInput);
  const std::vector<double> bad{2.0};
  CHECK_THROWS_AS(verify_l2_limit(1.0, q, bad), InvalidInput);
}

}  // TEST_SUITE
