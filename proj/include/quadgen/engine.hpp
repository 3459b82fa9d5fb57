#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quadgen/moments.hpp"
#include "quadgen/polynomial.hpp"
#include "quadgen/scalar.hpp"

namespace quadgen {

/// A fully determined rule: weights, degree of precision d, error
/// coefficient c (error = c * f^(d+1)(xi)), the triangular-system
/// determinant prod phi_j(x_{j+1}) as a conditioning diagnostic, and the
/// I(q_j) scan values (j = n .. degree+1) for audit.
template <ScalarLike S>
struct RuleResult {
  NodeSet<S> nodes;
  std::vector<S> weights;
  int degree = 0;
  S error_coefficient{};
  int derivative_order = 0;  // degree + 1
  S diag_det{};
  bool conditioning_warning = false;
  std::vector<S> iq_values;
  ArithmeticInfo arithmetic;
};

namespace detail {

/// Triangular evaluation table t[j][k] = phi_j(x_{k+1}), built from the
/// products t[j][k] = t[j-1][k] * (x_{k+1} - x_j) rather than Horner, so
/// Rational-mode entries stay exact at O(n^2) total cost. Only columns
/// k >= j are ever read.
template <ScalarLike S>
std::vector<std::vector<S>> newton_eval_table(const NodeSet<S>& nodes) {
  const int n = nodes.size();
  std::vector<std::vector<S>> t;
  t.reserve(static_cast<std::size_t>(n));
  t.emplace_back(static_cast<std::size_t>(n), S(1));
  for (int j = 1; j < n; ++j) {
    std::vector<S> row(static_cast<std::size_t>(n), S{});
    for (int k = j; k < n; ++k)
      row[static_cast<std::size_t>(k)] =
          t.back()[static_cast<std::size_t>(k)] * (nodes.node(k) - nodes.node(j - 1));
    t.push_back(std::move(row));
  }
  return t;
}

template <ScalarLike S>
std::vector<S> weights_from_table(const NodeSet<S>& nodes,
                                  const MomentProvider<S>& mp,
                                  const std::vector<std::vector<S>>& t) {
  const int n = nodes.size();
  mp.warm_up(n - 1);
  auto phi = newton_basis(nodes);
  std::vector<S> iphi;
  iphi.reserve(static_cast<std::size_t>(n));
  for (const auto& p : phi) iphi.push_back(mp.integrate(p));

  const S tol = default_zero_tolerance<S>();
  const S unit(1);
  for (int i = 1; i <= n; ++i)
    if (is_effectively_zero(t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)],
                            unit, tol))
      throw std::invalid_argument("compute_weights: coincident nodes (phi_{i-1}(x_i) ~ 0)");

  // Backward substitution of the upper triangular UCM system.
  std::vector<S> a(static_cast<std::size_t>(n), S{});
  a[static_cast<std::size_t>(n - 1)] =
      iphi[static_cast<std::size_t>(n - 1)] /
      t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  for (int i = n - 1; i >= 1; --i) {
    S s = iphi[static_cast<std::size_t>(i - 1)];
    for (int k = i; k < n; ++k)
      s -= t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] *
           a[static_cast<std::size_t>(k)];
    a[static_cast<std::size_t>(i - 1)] =
        s / t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
  }
  return a;
}

template <ScalarLike S>
struct ScanResult {
  int degree;
  std::vector<S> iq_values;  // I(q_n) .. I(q_{degree+1})
};

template <ScalarLike S>
ScanResult<S> scan_degree(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  const int n = nodes.size();
  mp.warm_up(2 * n);
  const S tol = default_zero_tolerance<S>();
  auto qs = q_extension(nodes, n);  // q_n .. q_{2n}
  std::vector<S> iq;
  iq.reserve(qs.size());
  // The zero test scales by the chain's running-max noise envelope: once
  // some q_{j'} passed through coefficients of envelope E, every later
  // q_j inherits absolute rounding dust ~ eps * E even if its own
  // coefficients are smaller.
  S scale{};
  for (int j = n; j <= 2 * n; ++j) {
    const auto& q = qs[static_cast<std::size_t>(j - n)];
    const S own = mp.noise_scale(q);
    if (own > scale) scale = own;
    iq.push_back(mp.integrate(q));
    if (!is_effectively_zero(iq.back(), scale, tol))
      return {j - 1, std::move(iq)};
  }
  // q_{2n} = prod (x-x_i)^2 has I(q_{2n}) > 0, so reaching here means the
  // zero test swallowed a genuinely nonzero value.
  throw std::runtime_error(
      "degree_of_precision: zero-test tolerance inconsistent "
      "(all I(q_j) declared zero through j = 2n)");
}

}  // namespace detail

/// Weights by backward substitution of the Newton-basis UCM system:
/// a_n = I(phi_{n-1}) / phi_{n-1}(x_n), then
/// a_i = (I(phi_{i-1}) - sum_{k>i} phi_{i-1}(x_k) a_k) / phi_{i-1}(x_i).
/// The unique solution of Q_n(phi_i) = I(phi_i), i < n.
template <ScalarLike S>
std::vector<S> compute_weights(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  auto t = detail::newton_eval_table(nodes);
  return detail::weights_from_table(nodes, mp, t);
}

template <ScalarLike S>
struct DegreeScan {
  int degree;
  std::vector<S> iq_values;
};

/// Degree detection: the smallest j >= n with I(q_j) not effectively zero
/// yields degree = j - 1. Scans j = n..2n and never trusts a
/// family-specific parity rule. Also returns the scanned I(q_j) values.
template <ScalarLike S>
DegreeScan<S> degree_of_precision(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  auto scan = detail::scan_degree(nodes, mp);
  return {scan.degree, std::move(scan.iq_values)};
}

/// Error coefficient c_n = I(q_{degree+1}) / (degree+1)!; the degree
/// argument must come from degree_of_precision on the same inputs.
template <ScalarLike S>
S error_coefficient(const NodeSet<S>& nodes, const MomentProvider<S>& mp, int degree) {
  const int n = nodes.size();
  if (degree < n - 1 || degree > 2 * n - 1)
    throw std::invalid_argument("error_coefficient: degree out of [n-1, 2n-1]");
  auto qs = q_extension(nodes, degree + 1 - n);
  return mp.integrate(qs.back()) / factorial<S>(static_cast<unsigned long>(degree) + 1);
}

/// Runs the full pipeline (weights, degree scan, error coefficient) on one
/// node set and packages the result with the conditioning diagnostic
/// det(A) = prod_{j=1}^{n-1} phi_j(x_{j+1}).
template <ScalarLike S>
RuleResult<S> build_rule(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  const int n = nodes.size();
  auto t = detail::newton_eval_table(nodes);
  auto weights = detail::weights_from_table(nodes, mp, t);
  auto scan = detail::scan_degree(nodes, mp);

  S c = scan.iq_values.back() /
        factorial<S>(static_cast<unsigned long>(scan.degree) + 1);

  S det(1);
  for (int j = 1; j < n; ++j)
    det *= t[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
  const bool warn = is_effectively_zero(det, S(1), relaxed_zero_tolerance<S>());

  return RuleResult<S>{nodes,
                       std::move(weights),
                       scan.degree,
                       std::move(c),
                       scan.degree + 1,
                       std::move(det),
                       warn,
                       std::move(scan.iq_values),
                       arithmetic_info<S>()};
}

}  // namespace quadgen
