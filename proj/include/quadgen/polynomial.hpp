#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadgen/scalar.hpp"

namespace quadgen {

/// Dense polynomial over S in the monomial basis; coeffs[k] multiplies x^k.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero (exact zeros are trimmed, never approximate ones).
template <ScalarLike S>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }

  static Polynomial identity() {  // p(x) = x
    return Polynomial(std::vector<S>{S(0), S(1)});
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const S> coefficients() const { return coeffs_; }

  const S& coefficient(int k) const {
    static const S zero{};
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Horner evaluation.
  S operator()(const S& x) const {
    S acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// p(x) * (x - root); exact coefficient shuffle, O(deg).
  Polynomial times_linear(const S& root) const {
    if (is_zero()) return {};
    std::vector<S> out(coeffs_.size() + 1, S{});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      out[k + 1] += coeffs_[k];
      out[k] -= coeffs_[k] * root;
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S{});
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, S{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const S& c, const Polynomial& p) {
    if (c.is_zero() || p.is_zero()) return {};
    std::vector<S> out;
    out.reserve(p.coeffs_.size());
    for (const S& a : p.coeffs_) out.push_back(c * a);
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

 private:
  std::vector<S> coeffs_;
};

template <ScalarLike S>
S evaluate(const Polynomial<S>& p, const S& x) {
  return p(x);
}

/// Returns p(alpha*x + beta) expanded in monomials; alpha must be nonzero.
template <ScalarLike S>
Polynomial<S> affine_substitute(const Polynomial<S>& p, const S& alpha, const S& beta) {
  if (alpha.is_zero())
    throw std::invalid_argument("affine_substitute: alpha must be nonzero");
  // Horner in the substituted variable: acc <- acc*(alpha x + beta) + c_k.
  Polynomial<S> acc;
  const Polynomial<S> lin(std::vector<S>{beta, alpha});
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * lin;
    acc += Polynomial<S>::constant(p.coefficient(k));
  }
  return acc;
}

/// Ordered quadrature abscissae with the integration interval they were
/// posed on. Nodes must be pairwise distinct and need not lie in [a,b].
template <ScalarLike S>
class NodeSet {
 public:
  NodeSet(std::vector<S> nodes, S a, S b)
      : nodes_(std::move(nodes)), a_(std::move(a)), b_(std::move(b)) {
    if (nodes_.empty()) throw std::invalid_argument("NodeSet: need n >= 1 nodes");
    if (!(a_ < b_)) throw std::invalid_argument("NodeSet: interval requires a < b");
    const S tol = default_zero_tolerance<S>();
    S span = abs(a_);
    if (abs(b_) > span) span = abs(b_);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        if (is_effectively_zero(nodes_[i] - nodes_[j], span, tol))
          throw std::invalid_argument("NodeSet: nodes must be pairwise distinct");
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<S>& nodes() const { return nodes_; }
  const S& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }  // 0-based
  const S& lower() const { return a_; }
  const S& upper() const { return b_; }

 private:
  std::vector<S> nodes_;
  S a_, b_;
};

/// Newton basis of P_{n-1} on the given nodes:
///   phi_0 = 1, phi_j = phi_{j-1} * (x - x_j),  1 <= j <= n-1.
/// phi_j vanishes at x_1..x_j and has degree j.
template <ScalarLike S>
std::vector<Polynomial<S>> newton_basis(const NodeSet<S>& nodes) {
  const int n = nodes.size();
  std::vector<Polynomial<S>> phi;
  phi.reserve(static_cast<std::size_t>(n));
  phi.push_back(Polynomial<S>::constant(S(1)));
  for (int j = 1; j < n; ++j)
    phi.push_back(phi.back().times_linear(nodes.node(j - 1)));
  return phi;
}

/// Basis extension q_n..q_{n+k_max}: q_n = phi_{n-1}*(x - x_n), then
/// q_j = q_{j-1}*(x - x_r) with r = ((j-1) mod n) + 1, so the factors cycle
/// through the nodes and every node is a root of every q_j. In particular
/// q_{2n} = prod (x - x_i)^2. Requires k_max <= n.
///
/// q_n's factors are multiplied in extreme-interleaved value order (same
/// exact product): taking alternately the smallest and largest remaining
/// node pairs off roots of opposite sign, which keeps intermediate
/// coefficient envelopes near the final one. The ascending order can pass
/// through intermediates ~1e5 times larger than the result, and in float
/// mode that rounding dust survives into coefficients that exact
/// cancellation would have zeroed.
template <ScalarLike S>
std::vector<Polynomial<S>> q_extension(const NodeSet<S>& nodes, int k_max) {
  const int n = nodes.size();
  if (k_max < 0 || k_max > n)
    throw std::invalid_argument("q_extension: k_max must lie in [0, n]");

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&nodes](int a, int b) { return nodes.node(a) < nodes.node(b); });

  Polynomial<S> qn = Polynomial<S>::constant(S(1));
  int lo = 0, hi = n - 1;
  bool take_lo = true;
  while (lo <= hi) {
    const int idx = take_lo ? order[static_cast<std::size_t>(lo++)]
                            : order[static_cast<std::size_t>(hi--)];
    qn = qn.times_linear(nodes.node(idx));
    take_lo = !take_lo;
  }

  std::vector<Polynomial<S>> qs;
  qs.reserve(static_cast<std::size_t>(k_max) + 1);
  qs.push_back(std::move(qn));
  for (int j = n + 1; j <= n + k_max; ++j) {
    const int r = ((j - 1) % n) + 1;  // 1-based node index
    qs.push_back(qs.back().times_linear(nodes.node(r - 1)));
  }
  return qs;
}

}  // namespace quadgen
