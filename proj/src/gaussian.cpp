#include "quadgen/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quadgen/moments.hpp"

namespace quadgen {

LegendreData legendre_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("legendre_polynomial: n must be >= 0");

  using P = Polynomial<Rational>;
  P prev = P::constant(Rational(1));  // P_0
  P cur = P::identity();              // P_1
  if (n == 0) cur = prev;
  for (int k = 1; k < n; ++k) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    P next = Rational(1, k + 1) *
             (Rational(2 * k + 1) * (P::identity() * cur) + Rational(-k) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }

  Rational alpha = Rational::pow2(-n) * Rational::factorial(2 * static_cast<unsigned long>(n)) /
                   power(Rational::factorial(static_cast<unsigned long>(n)), 2);
  Rational norm_sq = Rational(2, 2L * n + 1);

  if (!(cur.coefficient(n) == alpha))
    throw std::runtime_error("legendre_polynomial: leading coefficient disagrees with (2n)!/(2^n (n!)^2)");
  auto legendre_moments = MomentProvider<Rational>::legendre_weight();
  if (!(legendre_moments.integrate(cur * cur) == norm_sq))
    throw std::runtime_error("legendre_polynomial: ||P_n||^2 disagrees with 2/(2n+1)");

  return LegendreData{n, std::move(cur), std::move(alpha), std::move(norm_sq)};
}

std::pair<BigFloat, BigFloat> legendre_pair(int n, const BigFloat& x) {
  const Precision p = x.precision();
  BigFloat prev(1L, p);
  if (n == 0) return {prev, BigFloat(0L, p)};
  BigFloat cur = x;
  for (int k = 1; k < n; ++k) {
    BigFloat next = (x * cur * static_cast<long>(2 * k + 1) - prev * static_cast<long>(k)) /
                    BigFloat(k + 1L, p);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, prev};
}

namespace {

// derivative via P'_n = n (x P_n - P_{n-1}) / (x^2 - 1); valid strictly
// inside (-1,1), which is where every Legendre root lives
BigFloat legendre_derivative(int n, const BigFloat& x, const BigFloat& pn,
                             const BigFloat& pnm1) {
  return (BigFloat(static_cast<long>(n), x.precision()) * (x * pn - pnm1)) /
         (x * x - BigFloat(1L, x.precision()));
}

}  // namespace

std::vector<BigFloat> legendre_roots(int n, Precision precision) {
  if (n < 1) throw std::invalid_argument("legendre_roots: n must be >= 1");
  PrecisionScope scope(precision);

  constexpr int kMaxIterations = 200;
  const BigFloat step_threshold = scalb2(BigFloat(1), 2 - precision.bits());
  const BigFloat residual_bound =
      BigFloat::pow10(-(precision.decimal_digits() - 5));

  std::vector<BigFloat> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double guess = std::cos(M_PI * (4.0 * i - 1.0) / (4.0 * n + 2.0));
    BigFloat x(guess);
    bool converged = false;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      auto [pn, pnm1] = legendre_pair(n, x);
      BigFloat step = pn / legendre_derivative(n, x, pn, pnm1);
      x -= step;
      if (abs(step) <= step_threshold) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("legendre_roots: Newton iteration failed to converge for n = " +
                               std::to_string(n));
    auto [pn, pnm1] = legendre_pair(n, x);
    if (!(abs(pn) <= residual_bound * abs(legendre_derivative(n, x, pn, pnm1))))
      throw std::runtime_error("legendre_roots: residual check failed for n = " +
                               std::to_string(n));
    roots.push_back(std::move(x));
  }
  // Chebyshev-type guesses enumerate roots in descending order.
  std::reverse(roots.begin(), roots.end());
  return roots;
}

Rational gauss_closed_form_error_coefficient(int n) {
  if (n < 1)
    throw std::invalid_argument("gauss_closed_form_error_coefficient: n must be >= 1");
  const Rational num =
      Rational::pow2(2L * n + 1) * power(Rational::factorial(static_cast<unsigned long>(n)), 4);
  const Rational den =
      Rational(2L * n + 1) * power(Rational::factorial(2 * static_cast<unsigned long>(n)), 3);
  return num / den;
}

GaussRule gauss_legendre_rule(int n, Precision precision) {
  PrecisionScope scope(precision);
  const int dd = precision.decimal_digits();

  auto roots = legendre_roots(n, precision);
  NodeSet<BigFloat> nodes(std::move(roots), BigFloat(-1L), BigFloat(1L));
  auto mp = MomentProvider<BigFloat>::legendre_weight();
  auto rule = build_rule(nodes, mp);

  LegendreData data = legendre_polynomial(n);
  Rational closed_form = gauss_closed_form_error_coefficient(n);

  if (rule.degree != 2 * n - 1)
    throw std::runtime_error("gauss_legendre_rule: detected degree " +
                             std::to_string(rule.degree) +
                             " instead of 2n-1 (precision too low for this n?)");

  // Orthogonality consistency: the scan's I(q_2n) must match
  // ||P_n||^2 / alpha^2 within the scan's own noise scale. A defective
  // root or precision shortfall shows up here at value scale.
  const BigFloat tol = BigFloat::pow10(-(dd - 10));
  const BigFloat reference(data.norm_sq / (data.alpha * data.alpha));
  auto qs = q_extension(nodes, n);
  BigFloat chain_scale(0L);
  for (const auto& qj : qs) {
    BigFloat own = mp.noise_scale(qj);
    if (own > chain_scale) chain_scale = own;
  }
  if (!is_effectively_zero(rule.iq_values.back() - reference, chain_scale, tol))
    throw std::runtime_error(
        "gauss_legendre_rule: I(q_2n) inconsistent with ||P_n||^2/alpha^2 "
        "(root or precision defect)");

  BigFloat weight_sum(0L);
  for (const auto& w : rule.weights) {
    if (!(w.sign() > 0))
      throw std::runtime_error(
          "gauss_legendre_rule: nonpositive weight (precision too low for this n)");
    weight_sum += w;
  }
  if (!(abs(weight_sum - BigFloat(2L)) <= tol))
    throw std::runtime_error("gauss_legendre_rule: weight sum deviates from 2");

  return GaussRule{std::move(rule), std::move(closed_form), std::move(data)};
}

}  // namespace quadgen
