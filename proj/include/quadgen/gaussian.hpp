#pragma once

#include <utility>
#include <vector>

#include "quadgen/engine.hpp"
#include "quadgen/polynomial.hpp"
#include "quadgen/scalar.hpp"

namespace quadgen {

/// Exact Legendre data: monomial coefficients of P_n from the three-term
/// recurrence, the leading coefficient alpha = (2n)!/(2^n (n!)^2), and the
/// squared L2 norm 2/(2n+1); both closed forms are cross-checked against
/// the recurrence output.
struct LegendreData {
  int n;
  Polynomial<Rational> poly;
  Rational alpha;
  Rational norm_sq;
};

LegendreData legendre_polynomial(int n);

/// P_n(x) and P_{n-1}(x) by the three-term recurrence at the argument's
/// precision; used by the root finder to avoid the cancellation the
/// expanded monomial form suffers at large n.
std::pair<BigFloat, BigFloat> legendre_pair(int n, const BigFloat& x);

/// The n roots of P_n, ascending, each found by Newton iteration from the
/// Chebyshev-type initial guess cos(pi (4i-1)/(4n+2)) seeded in double.
std::vector<BigFloat> legendre_roots(int n, Precision precision);

/// 2^{2n+1} (n!)^4 / ((2n+1) ((2n)!)^3), exact.
Rational gauss_closed_form_error_coefficient(int n);

struct GaussRule {
  RuleResult<BigFloat> rule;
  Rational closed_form_c;
  LegendreData legendre;
};

/// Builds the n-point Gauss-Legendre rule on [-1,1] through the generic
/// engine (the q-scan is run, not skipped, as a health check on the roots)
/// and validates: degree 2n-1, positive weights, weight sum 2, and the
/// engine's I(q_2n) against the orthogonality identity ||P_n||^2 / alpha^2.
GaussRule gauss_legendre_rule(int n, Precision precision);

}  // namespace quadgen
