#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/random_element.hpp"

namespace expmart::verify {

/// Outcome of a randomized identity check: the worst relative defect seen
/// over `cases` inputs and the tolerance it was held to.
struct CheckSummary {
  std::string name;
  std::size_t cases = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// All four relations give the zero element: worst relative residual
/// coefficient, tolerance 1e-12.
CheckSummary check_commutator(algebra::Commutator which, std::uint64_t seed, std::size_t count,
                              const algebra::SamplerBounds& bounds = {});

/// |<Gf, Gg> - <f, g>| / (||f|| ||g||) on random pairs sharing q.
CheckSummary check_unitarity(std::uint64_t seed, std::size_t count, const algebra::SamplerBounds& bounds = {});

/// G^4 f == f; worst relative coefficient difference (bit-exact expected).
CheckSummary check_order_four(std::uint64_t seed, std::size_t count, const algebra::SamplerBounds& bounds = {});

/// mul(E_c, E_d) == exp(c d q) E_{c+d}.
CheckSummary check_product_formula(std::uint64_t seed, std::size_t count);

/// X f == D f + D* f.
CheckSummary check_adjoint_split(std::uint64_t seed, std::size_t count, const algebra::SamplerBounds& bounds = {});

/// <D f, g> == <f, D* g>, relative to ||D f|| ||g|| + ||f|| ||D* g||.
CheckSummary check_adjointness(std::uint64_t seed, std::size_t count, const algebra::SamplerBounds& bounds = {});

/// G H_n == (-i)^n H_n for n <= max_degree at each q in the bounds.
CheckSummary check_hermite_eigen(int max_degree, const algebra::SamplerBounds& bounds = {});

/// D H_n == n q H_{n-1} and D* H_n == H_{n+1}.
CheckSummary check_ladder(int max_degree, const algebra::SamplerBounds& bounds = {});

/// apply_G agrees with the generating-function route on random elements.
/// Uses tighter bounds (|c| q <= 2) where the monomial route is well
/// conditioned.
CheckSummary check_transform_routes(std::uint64_t seed, std::size_t count);

/// expectation(f) agrees with the monomial moment recursion.
CheckSummary check_expectation_routes(std::uint64_t seed, std::size_t count);

}  // namespace expmart::verify
