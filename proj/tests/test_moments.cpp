#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quadgen/moments.hpp"

using namespace quadgen;
using testutil::q;

namespace {

Polynomial<Rational> poly(std::initializer_list<Rational> coeffs) {
  return Polynomial<Rational>(std::vector<Rational>(coeffs));
}

}  // namespace

TEST_CASE("uniform moments satisfy the closed form") {
  auto mp = MomentProvider<Rational>::uniform(q(0), q(1));
  CHECK(mp.moment(0) == q(1));
  CHECK(mp.moment(2) == q(1, 3));
  CHECK(mp.moment(7) == q(1, 8));
  auto mp2 = MomentProvider<Rational>::uniform(q(-2), q(3));
  CHECK(mp2.moment(0) == q(5));
  CHECK(mp2.moment(1) == q(5, 2));  // (9-4)/2
  CHECK(mp2.moment(2) == q(35, 3));
}

TEST_CASE("legendre weight moments") {
  auto mp = MomentProvider<Rational>::legendre_weight();
  CHECK(mp.moment(0) == q(2));
  CHECK(mp.moment(3) == q(0));
  CHECK(mp.moment(4) == q(2, 5));
  CHECK(mp.lower() == q(-1));
  CHECK(mp.upper() == q(1));
}

TEST_CASE("integrate matches hand integrals") {
  auto mp01 = MomentProvider<Rational>::uniform(q(0), q(1));
  CHECK(mp01.integrate(poly({q(0), q(-1), q(1)})) == q(-1, 6));  // x(x-1)

  auto mp02 = MomentProvider<Rational>::uniform(q(0), q(2));
  // t^2 (t-1)(t-2) = t^4 - 3t^3 + 2t^2
  CHECK(mp02.integrate(poly({q(0), q(0), q(2), q(-3), q(1)})) == q(-4, 15));

  auto leg = MomentProvider<Rational>::legendre_weight();
  CHECK(leg.integrate(poly({q(1)})) == q(2));
  CHECK(leg.integrate(Polynomial<Rational>()) == q(0));
}

TEST_CASE("integrate(1) equals the interval length") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto [a, b] = testutil::random_interval(rng);
    auto mp = MomentProvider<Rational>::uniform(a, b);
    CHECK(mp.integrate(poly({q(1)})) == b - a);
  }
}

TEST_CASE("integration is linear") {
  std::mt19937_64 rng(6);
  auto random_poly = [&rng](int max_deg) {
    std::vector<Rational> c;
    int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int k = 0; k <= deg; ++k) c.push_back(testutil::random_rational(rng));
    return Polynomial<Rational>(std::move(c));
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto [a, b] = testutil::random_interval(rng);
    auto mp = MomentProvider<Rational>::uniform(a, b);
    auto p1 = random_poly(6);
    auto p2 = random_poly(6);
    Rational alpha = testutil::random_rational(rng);
    Rational beta = testutil::random_rational(rng);
    CHECK(mp.integrate(alpha * p1 + beta * p2) ==
          alpha * mp.integrate(p1) + beta * mp.integrate(p2));
  }
}

TEST_CASE("odd polynomials integrate to zero under the legendre weight") {
  auto leg = MomentProvider<Rational>::legendre_weight();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    int halfdeg = static_cast<int>(rng() % 4);
    for (int k = 0; k <= 2 * halfdeg + 1; ++k)
      c.push_back(k % 2 == 1 ? testutil::random_rational(rng) : q(0));
    CHECK(leg.integrate(Polynomial<Rational>(std::move(c))).is_zero());
  }
}

TEST_CASE("absolute scale bounds the term sum") {
  auto mp = MomentProvider<Rational>::uniform(q(-1), q(1));
  auto p = poly({q(1), q(-2), q(3)});
  CHECK(mp.absolute_scale(p) == q(2) + q(3) * q(2, 3));
  CHECK(abs(mp.integrate(p)) <= mp.absolute_scale(p));
}

TEST_CASE("moment cache grows on demand and under warm_up") {
  auto mp = MomentProvider<Rational>::uniform(q(0), q(1));
  CHECK(mp.cached_order() == -1);
  mp.warm_up(10);
  CHECK(mp.cached_order() == 10);
  CHECK(mp.moment(15) == q(1, 16));
  CHECK(mp.cached_order() == 15);
}

TEST_CASE("bigfloat moments agree with the rational closed forms") {
  PrecisionScope scope(Precision::from_decimal_digits(60));
  auto mp = MomentProvider<BigFloat>::uniform(BigFloat(0L), BigFloat(2L));
  BigFloat expected = BigFloat(Rational(8, 3));
  CHECK(abs(mp.moment(2) - expected) <= BigFloat::pow10(-55));
}
