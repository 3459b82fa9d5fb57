#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quadgen/moments.hpp"
#include "quadgen/polynomial.hpp"
#include "quadgen/scalar.hpp"

namespace quadgen::oracle {

/// Brute-force weights from the monomial-basis UCM system
/// sum_i a_i x_i^k = mu_k, k = 0..n-1, solved by full-pivot Gaussian
/// elimination. Deliberately a different basis and a different solver than
/// the engine, so agreement between the two is evidence.
template <ScalarLike S>
std::vector<S> vandermonde_weights(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  const int n = nodes.size();
  mp.warm_up(n - 1);

  std::vector<std::vector<S>> m(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& row = m[static_cast<std::size_t>(k)];
    row.reserve(static_cast<std::size_t>(n) + 1);
    if (k == 0) {
      for (int i = 0; i < n; ++i) row.push_back(S(1));
    } else {
      const auto& prev = m[static_cast<std::size_t>(k - 1)];
      for (int i = 0; i < n; ++i)
        row.push_back(prev[static_cast<std::size_t>(i)] * nodes.node(i));
    }
    row.push_back(mp.moment(k));  // augmented column
  }

  S entry_scale{};
  for (const auto& row : m)
    for (int i = 0; i < n; ++i)
      if (abs(row[static_cast<std::size_t>(i)]) > entry_scale)
        entry_scale = abs(row[static_cast<std::size_t>(i)]);
  const S tol = default_zero_tolerance<S>();

  std::vector<int> col_of(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) col_of[static_cast<std::size_t>(i)] = i;

  for (int s = 0; s < n; ++s) {
    int pr = s, pc = s;
    S best = abs(m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)]);
    for (int r = s; r < n; ++r)
      for (int c = s; c < n; ++c)
        if (abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) > best) {
          best = abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
          pr = r;
          pc = c;
        }
    if (is_effectively_zero(m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)],
                            entry_scale, tol))
      throw std::invalid_argument("vandermonde_weights: singular system (duplicate nodes)");
    std::swap(m[static_cast<std::size_t>(s)], m[static_cast<std::size_t>(pr)]);
    if (pc != s) {
      for (auto& row : m)
        std::swap(row[static_cast<std::size_t>(s)], row[static_cast<std::size_t>(pc)]);
      std::swap(col_of[static_cast<std::size_t>(s)], col_of[static_cast<std::size_t>(pc)]);
    }
    for (int r = s + 1; r < n; ++r) {
      S f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] /
            m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
      if (f.is_zero()) continue;
      for (int c = s; c <= n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * m[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
    }
  }

  std::vector<S> x(static_cast<std::size_t>(n), S{});
  for (int s = n - 1; s >= 0; --s) {
    S acc = m[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)];
    for (int c = s + 1; c < n; ++c)
      acc -= m[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] *
             x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(s)] =
        acc / m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
  }

  std::vector<S> weights(static_cast<std::size_t>(n), S{});
  for (int s = 0; s < n; ++s)
    weights[static_cast<std::size_t>(col_of[static_cast<std::size_t>(s)])] =
        std::move(x[static_cast<std::size_t>(s)]);
  return weights;
}

/// Largest d <= k_cap with sum_i a_i x_i^k = mu_k (effectively) for all
/// k <= d; probing monomials suffices by linearity. The tolerance should
/// reflect the accuracy of the weights being probed; the default assumes
/// near-working-precision weights.
template <ScalarLike S>
int probe_degree(const NodeSet<S>& nodes, const std::vector<S>& weights,
                 const MomentProvider<S>& mp, int k_cap,
                 const S& tol = default_zero_tolerance<S>()) {
  const int n = nodes.size();
  if (k_cap < n) throw std::invalid_argument("probe_degree: k_cap must be >= n");
  mp.warm_up(k_cap);
  std::vector<S> pw(static_cast<std::size_t>(n), S(1));
  for (int k = 0; k <= k_cap; ++k) {
    if (k > 0)
      for (int i = 0; i < n; ++i) pw[static_cast<std::size_t>(i)] *= nodes.node(i);
    S q{}, scale{};
    for (int i = 0; i < n; ++i) {
      q += weights[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(i)];
      scale += abs(weights[static_cast<std::size_t>(i)]) * abs(pw[static_cast<std::size_t>(i)]);
    }
    scale += abs(mp.moment(k));
    if (!is_effectively_zero(q - mp.moment(k), scale, tol)) return k - 1;
  }
  return k_cap;
}

template <ScalarLike S>
struct OracleReport {
  std::vector<S> weights;
  int detected_degree;
  S max_exactness_residual;
};

/// Full independent report: Vandermonde weights, monomial-probe degree
/// (k_cap = 2n), and the largest |Q(x^k) - mu_k| over the exact range.
template <ScalarLike S>
OracleReport<S> analyze(const NodeSet<S>& nodes, const MomentProvider<S>& mp) {
  const int n = nodes.size();
  auto weights = vandermonde_weights(nodes, mp);
  int degree = probe_degree(nodes, weights, mp, 2 * n);
  S worst{};
  std::vector<S> pw(static_cast<std::size_t>(n), S(1));
  for (int k = 0; k <= degree; ++k) {
    if (k > 0)
      for (int i = 0; i < n; ++i) pw[static_cast<std::size_t>(i)] *= nodes.node(i);
    S q{};
    for (int i = 0; i < n; ++i)
      q += weights[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(i)];
    S r = abs(q - mp.moment(k));
    if (r > worst) worst = r;
  }
  return {std::move(weights), degree, std::move(worst)};
}

}  // namespace quadgen::oracle
