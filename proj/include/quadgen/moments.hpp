#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quadgen/polynomial.hpp"
#include "quadgen/scalar.hpp"

namespace quadgen {

/// Supplies the moments mu_k = integral of w(x) * x^k over (a,b) for the
/// supported weight functions, and the induced functional
/// I(p) = sum coeff_k(p) * mu_k. Moments are memoized; warm_up() before
/// sharing a provider across threads, reads are then const.
template <ScalarLike S>
class MomentProvider {
 public:
  enum class Kind { Uniform, LegendreWeight };

  /// w == 1 on [a,b]; mu_k = (b^{k+1} - a^{k+1})/(k+1).
  static MomentProvider uniform(S a, S b) {
    if (!(a < b)) throw std::invalid_argument("MomentProvider: requires a < b");
    return MomentProvider(Kind::Uniform, std::move(a), std::move(b));
  }

  /// w == 1 on [-1,1]; mu_k = 0 for odd k, 2/(k+1) for even k.
  static MomentProvider legendre_weight() {
    return MomentProvider(Kind::LegendreWeight, S(-1), S(1));
  }

  Kind kind() const { return kind_; }
  const S& lower() const { return a_; }
  const S& upper() const { return b_; }

  std::string kind_name() const {
    return kind_ == Kind::Uniform ? "uniform" : "legendre";
  }

  void warm_up(int max_order) const { ensure(max_order); }
  int cached_order() const { return static_cast<int>(cache_.size()) - 1; }

  const S& moment(int k) const {
    if (k < 0) throw std::invalid_argument("moment: order must be >= 0");
    ensure(k);
    return cache_[static_cast<std::size_t>(k)];
  }

  /// I(p) = sum coeff_k(p) * mu_k; exact in Rational mode.
  S integrate(const Polynomial<S>& p) const {
    S acc{};
    if (p.is_zero()) return acc;
    ensure(p.degree());
    auto coeffs = p.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      acc += coeffs[k] * cache_[k];
    return acc;
  }

  /// sum |coeff_k(p)| * |mu_k| — the natural magnitude of integrate(p)'s
  /// term sum, used to scale the zero test.
  S absolute_scale(const Polynomial<S>& p) const {
    S acc{};
    if (p.is_zero()) return acc;
    ensure(p.degree());
    auto coeffs = p.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      acc += abs(coeffs[k]) * abs(cache_[k]);
    return acc;
  }

  /// (sum_k |coeff_k(p)|) * max_k |mu_k| — an upper envelope for
  /// absolute_scale that also covers coefficient rounding dust sitting on
  /// orders whose moment vanishes (an odd p under an even weight has
  /// absolute_scale ~ 0 while its computation still carries full-size
  /// coefficients).
  S noise_scale(const Polynomial<S>& p) const {
    S env{}, mu_max{};
    if (p.is_zero()) return env;
    ensure(p.degree());
    auto coeffs = p.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      env += abs(coeffs[k]);
      if (abs(cache_[k]) > mu_max) mu_max = abs(cache_[k]);
    }
    return env * mu_max;
  }

 private:
  MomentProvider(Kind kind, S a, S b)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)),
        apow_(S(1)), bpow_(S(1)) {}

  void ensure(int k) const {
    while (static_cast<int>(cache_.size()) <= k) {
      const int order = static_cast<int>(cache_.size());
      if (kind_ == Kind::Uniform) {
        // running powers hold a^order, b^order on entry
        apow_ *= a_;
        bpow_ *= b_;
        cache_.push_back((bpow_ - apow_) / S(order + 1));
      } else {
        cache_.push_back(order % 2 == 1 ? S(0) : S(2) / S(order + 1));
      }
    }
  }

  Kind kind_;
  S a_, b_;
  mutable std::vector<S> cache_;
  mutable S apow_, bpow_;  // a^{|cache|}, b^{|cache|}; Uniform only
};

}  // namespace quadgen
