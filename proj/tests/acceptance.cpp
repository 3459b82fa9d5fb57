// Acceptance suite: one pass/fail line per criterion.
//
// Default run covers criteria 1-6; criterion 7 (the long Gauss-Legendre
// sweep to n = 256) runs only with --long.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "helpers.hpp"
#include "quadgen/classical.hpp"
#include "quadgen/engine.hpp"
#include "quadgen/gaussian.hpp"
#include "quadgen/oracle.hpp"

using namespace quadgen;
using testutil::q;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int criterion, bool ok, const std::string& what, double elapsed) {
  std::printf("criterion %d: %s — %s (%.1f s)\n", criterion, ok ? "PASS" : "FAIL",
              what.c_str(), elapsed);
  std::fflush(stdout);
  return ok;
}

// 1: exact classical tables against the oracle, plus pinned spot values
bool criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  auto check_family = [&](Family family, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
      auto fam = build_family_rule<Rational>({family, n});
      const auto& rule = fam.rule;
      auto mp = MomentProvider<Rational>::uniform(rule.nodes.lower(), rule.nodes.upper());
      auto ow = oracle::vandermonde_weights(rule.nodes, mp);
      ok = ok && (rule.weights == ow);
      ok = ok && (rule.degree == oracle::probe_degree(rule.nodes, rule.weights, mp, 2 * n));
      if (family == Family::ClosedNewtonCotes)
        ok = ok && (rule.degree == (n % 2 == 0 ? n - 1 : n));
      if (family == Family::AdamsBashforth || family == Family::AdamsMoulton)
        ok = ok && (rule.degree == n - 1);
    }
  };
  check_family(Family::ClosedNewtonCotes, 2, 10);
  check_family(Family::OpenNewtonCotes, 1, 8);
  check_family(Family::AdamsBashforth, 1, 8);
  check_family(Family::AdamsMoulton, 1, 8);

  auto trapezoid = build_family_rule<Rational>({Family::ClosedNewtonCotes, 2});
  ok = ok && (trapezoid.scaled_error.coefficient == q(-1, 12));
  auto simpson = build_family_rule<Rational>({Family::ClosedNewtonCotes, 3});
  ok = ok && (simpson.scaled_error.coefficient == q(-1, 90));
  ok = ok && (simpson.scaled_error.h_power == 5);
  auto ab2 = build_family_rule<Rational>({Family::AdamsBashforth, 2});
  ok = ok && (ab2.scaled_error.coefficient == q(5, 12));
  auto ab4 = build_family_rule<Rational>({Family::AdamsBashforth, 4});
  ok = ok && (ab4.rule.weights ==
              std::vector<Rational>{q(55, 24), q(-59, 24), q(37, 24), q(-9, 24)});
  ok = ok && (ab4.scaled_error.coefficient == q(251, 720));

  double dt = seconds_since(t0);
  ok = ok && dt < 5.0;
  return report(1, ok, "exact classical tables, oracle equality and spot values", dt);
}

// 2: Gauss-Legendre degree 2n-1 and the closed-form c_n, n = 1..32.
// Working precision is the 384-bit default (>= the criterion's 60-digit
// floor); the tolerance is pinned at the floor, 1e-50 = 10^-(60-10).
bool criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  Precision prec = Precision(384);
  PrecisionScope scope(prec);
  const BigFloat tol = BigFloat::pow10(-50);
  for (int n = 1; n <= 32; ++n) {
    auto g = gauss_legendre_rule(n, prec);
    ok = ok && (g.rule.degree == 2 * n - 1);
    BigFloat cf(g.closed_form_c);
    ok = ok && (abs(g.rule.error_coefficient - cf) / cf <= tol);
  }
  return report(2, ok, "gauss-legendre degree 2n-1 and closed-form c_n, n = 1..32",
                seconds_since(t0));
}

// 3: positivity and |sum w - 2| <= 1e-90 at 100-digit precision, n = 2..64
bool criterion3_range(int lo, int hi, Precision prec, int criterion_id,
                      const std::string& what) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  PrecisionScope scope(prec);
  const BigFloat bound = BigFloat::pow10(-90);
  for (int n = lo; n <= hi; ++n) {
    auto g = gauss_legendre_rule(n, prec);
    BigFloat sum(0L);
    for (const auto& w : g.rule.weights) {
      ok = ok && (w > BigFloat(0L));
      sum += w;
    }
    ok = ok && (abs(sum - BigFloat(2L)) <= bound);
  }
  return report(criterion_id, ok, what, seconds_since(t0));
}

// 4: Prop. 2 identity I(q_2n) = ||P_n||^2 / alpha^2, n = 2..16, at the
// 384-bit default; relative tolerance 1e-90 (digits = 100, the paper's own
// precision; the scan loses ~0.68n digits to cancellation, measured
// rel err <= 7e-105 here).
bool criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  Precision prec = Precision(384);
  PrecisionScope scope(prec);
  const BigFloat tol = BigFloat::pow10(-90);
  for (int n = 2; n <= 16; ++n) {
    auto g = gauss_legendre_rule(n, prec);
    BigFloat reference(g.legendre.norm_sq / (g.legendre.alpha * g.legendre.alpha));
    BigFloat iq2n = g.rule.iq_values.back();
    ok = ok && (abs(iq2n - reference) / reference <= tol);
  }
  return report(4, ok, "I(q_2n) matches ||P_n||^2/alpha^2, n = 2..16", seconds_since(t0));
}

// 7 (long mode): the criterion-3 invariants extended to n = 65..256,
// checked at the weight level. The full degree scan accumulates ~0.08
// digits of rounding per node along its 2n-step product chain, which
// outgrows the zero test's 10 guard digits near n ~ 160 at ANY working
// precision (tolerance and rounding unit scale together); the weight
// recursion only needs enough precision to outrun its ~0.58
// digits-per-node amplification — hence 260 digits for
// 100-digit-correct weights at n = 256.
bool criterion7(int lo, int hi) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  Precision prec = Precision::from_decimal_digits(260);
  PrecisionScope scope(prec);
  const BigFloat bound = BigFloat::pow10(-90);
  for (int n = lo; n <= hi; ++n) {
    auto roots = legendre_roots(n, prec);
    NodeSet<BigFloat> nodes(std::move(roots), BigFloat(-1), BigFloat(1));
    auto mp = MomentProvider<BigFloat>::legendre_weight();
    auto weights = compute_weights(nodes, mp);
    BigFloat sum(0L);
    for (const auto& w : weights) {
      ok = ok && (w > BigFloat(0L));
      sum += w;
    }
    ok = ok && (abs(sum - BigFloat(2L)) <= bound);
  }
  return report(7, ok,
                "long mode: weights positive, |sum - 2| <= 1e-90, n = 65..256",
                seconds_since(t0));
}

// 5: exactness/sharpness over 200 random rational node sets
bool criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::mt19937_64 rng(0xACCE5501);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto vals = testutil::random_distinct_nodes(rng, n);
    auto [a, b] = testutil::random_interval(rng);
    NodeSet<Rational> ns(vals, a, b);
    auto mp = MomentProvider<Rational>::uniform(a, b);
    auto rule = build_rule(ns, mp);

    ok = ok && (rule.degree >= n - 1) && (rule.degree <= 2 * n - 1);
    for (int k = 0; k <= rule.degree + 1; ++k) {
      Rational lhs;
      for (int i = 0; i < n; ++i)
        lhs += rule.weights[static_cast<std::size_t>(i)] *
               power(ns.node(i), static_cast<unsigned long>(k));
      if (k <= rule.degree)
        ok = ok && (lhs == mp.moment(k));
      else
        ok = ok && !(lhs == mp.moment(k));
    }
  }
  return report(5, ok, "exact through degree d, sharp at d+1, d in [n-1, 2n-1]; 200 sets",
                seconds_since(t0));
}

// 6: degree and c_n are q-family independent
bool criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::mt19937_64 rng(0xACCE5506);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto vals = testutil::random_distinct_nodes(rng, n);
    auto [a, b] = testutil::random_interval(rng);
    NodeSet<Rational> ns(vals, a, b);
    auto mp = MomentProvider<Rational>::uniform(a, b);
    auto rule = build_rule(ns, mp);

    auto phi = newton_basis(ns);
    Polynomial<Rational> qt = phi.back();
    int degree = -1;
    Rational c;
    for (int j = n; j <= 2 * n; ++j) {
      qt = qt.times_linear(ns.node(n - 1));  // qt_j = phi_{n-1} (x - x_n)^{j-n+1}
      Rational iq = mp.integrate(qt);
      if (!iq.is_zero()) {
        degree = j - 1;
        c = iq / factorial<Rational>(static_cast<unsigned long>(j));
        break;
      }
    }
    ok = ok && (degree == rule.degree) && (c == rule.error_coefficient);
  }
  return report(6, ok, "alternate q-family gives identical degree and c_n; 50 sets",
                seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  bool long_mode = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_mode = true;

  bool ok = true;
  ok &= criterion1();
  ok &= criterion2();
  ok &= criterion3_range(2, 64, Precision::from_decimal_digits(100), 3,
                         "gauss-legendre weights positive, |sum - 2| <= 1e-90, "
                         "n = 2..64 at 100 digits");
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6();
  if (long_mode) {
    ok &= criterion7(65, 256);
  } else {
    std::printf("criterion 7: SKIP — long mode (n to 256); run with --long\n");
  }
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return ok ? 0 : 1;
}
