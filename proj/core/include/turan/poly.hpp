#pragma once

#include <cstdint>
#include <vector>

#include "turan/fq.hpp"

namespace turan {

// C(num_vars + degree, degree), saturating at UINT64_MAX on overflow.
std::uint64_t monomial_count(int num_vars, int degree);

// Dense multivariate polynomial over F_q, total degree <= max_degree.
//
// Coefficients are stored in graded order: ascending total degree, and
// within one degree by descending first exponent, recursing on the remaining
// variables. That layout makes substituting the first variable a single
// linear pass (each monomial lands at a precomputable slot of the dense
// table one variable down), which is what the whole-grid evaluator builds
// on. monomial_rank/unrank define the layout precisely.
struct MultiPoly {
  std::uint32_t q = 2;
  int num_vars = 0;
  int max_degree = 0;
  std::vector<std::uint32_t> coeffs;

  std::uint64_t n_monomials() const { return coeffs.size(); }

  // Exact evaluation at one point (point.size() == num_vars, entries reduced
  // mod q). Cost O(#monomials).
  std::uint32_t eval_raw(const std::vector<std::uint32_t>& point) const;
  FqScalar eval(const std::vector<FqScalar>& point) const;
};

std::uint64_t monomial_rank(const std::vector<int>& exponents);
std::vector<int> monomial_unrank(std::uint64_t rank, int num_vars);

MultiPoly zero_poly(std::uint32_t q, int num_vars, int degree);

// Every monomial of total degree <= degree gets an independent uniform
// coefficient. The monomial count is capped (error carries the count).
MultiPoly sample_poly(std::uint32_t q, int num_vars, int degree, std::uint64_t seed,
                      std::uint64_t monomial_limit = 1'000'000);

// Values of p over all q^num_vars points, indexed big-endian by coordinates
// (the first variable is the most significant digit). Computed by chained
// first-variable substitution, so the cost is sum_j q^j * M_j rather than
// q^n * M. The point count is capped.
std::vector<std::uint32_t> grid_values(const MultiPoly& p,
                                       std::uint64_t point_limit = 10'000'000);

struct DerivedConstants {
  long long s = 0;
  long long d = 0;
};

// s = b(b-a+k-1) + a + 1 and d = b*s - 1.
DerivedConstants derive_constants(int k, int a, int b);

// The random-construction analysis assumes q >= C(d+1, 2); desk-scale runs
// sit far below that on purpose, so this is only ever surfaced as a warning.
bool q_meets_degree_threshold(std::uint32_t q, long long d);

}  // namespace turan
