#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quadgen/polynomial.hpp"

using namespace quadgen;
using testutil::q;

namespace {

Polynomial<Rational> poly(std::initializer_list<Rational> coeffs) {
  return Polynomial<Rational>(std::vector<Rational>(coeffs));
}

}  // namespace

TEST_CASE("polynomial normalization and degree") {
  CHECK(Polynomial<Rational>().is_zero());
  CHECK(Polynomial<Rational>().degree() == -1);
  CHECK(poly({q(1), q(0), q(0)}).degree() == 0);
  CHECK(poly({q(0), q(1)}).degree() == 1);
  CHECK(poly({q(0), q(0)}).is_zero());
}

TEST_CASE("horner evaluation") {
  auto p = poly({q(0), q(-1), q(1)});  // x^2 - x
  CHECK(p(q(2)) == q(2));
  CHECK(p(q(0)) == q(0));
  CHECK(Polynomial<Rational>()(q(17)) == q(0));
  // phi_2 on nodes {0,1} evaluated at 2 is 2!
  auto phi2 = poly({q(0), q(-1), q(1)});
  CHECK(phi2(q(2)) == q(2));
}

TEST_CASE("newton basis on small node sets") {
  NodeSet<Rational> single({q(0)}, q(-1), q(1));
  auto phi1 = newton_basis(single);
  REQUIRE(phi1.size() == 1);
  CHECK(phi1[0] == poly({q(1)}));

  NodeSet<Rational> pair({q(0), q(1)}, q(0), q(1));
  auto phi2 = newton_basis(pair);
  REQUIRE(phi2.size() == 2);
  CHECK(phi2[0] == poly({q(1)}));
  CHECK(phi2[1] == poly({q(0), q(1)}));  // x

  NodeSet<Rational> triple({q(0), q(1), q(2)}, q(0), q(2));
  auto phi3 = newton_basis(triple);
  REQUIRE(phi3.size() == 3);
  CHECK(phi3[2] == poly({q(0), q(-1), q(1)}));  // x^2 - x
}

TEST_CASE("newton basis rejects coincident nodes") {
  CHECK_THROWS_AS(NodeSet<Rational>({q(1), q(1)}, q(0), q(2)), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet<Rational>({q(1, 2), q(2, 4)}, q(0), q(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(NodeSet<Rational>({}, q(0), q(1)), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet<Rational>({q(0)}, q(1), q(1)), std::invalid_argument);
}

TEST_CASE("q extension on {0,1}") {
  NodeSet<Rational> nodes({q(0), q(1)}, q(0), q(1));
  auto qs = q_extension(nodes, 2);
  REQUIRE(qs.size() == 3);
  CHECK(qs[0] == poly({q(0), q(-1), q(1)}));              // x^2 - x
  CHECK(qs[1] == poly({q(0), q(0), q(-1), q(1)}));        // x^3 - x^2
  CHECK(qs[2] == poly({q(0), q(0), q(1), q(-2), q(1)}));  // x^4 - 2x^3 + x^2
  CHECK_THROWS_AS(q_extension(nodes, 3), std::invalid_argument);
}

TEST_CASE("q extension on a single node") {
  NodeSet<Rational> nodes({q(3, 2)}, q(0), q(2));
  auto qs = q_extension(nodes, 1);
  REQUIRE(qs.size() == 2);
  CHECK(qs[0] == poly({q(-3, 2), q(1)}));
  CHECK(qs[1] == poly({q(9, 4), q(-3), q(1)}));  // (x - 3/2)^2
}

TEST_CASE("q_2n is the squared node polynomial") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto nodes = testutil::random_distinct_nodes(rng, n);
    NodeSet<Rational> ns(nodes, q(-3), q(7, 2));
    auto qs = q_extension(ns, n);
    Polynomial<Rational> prod = Polynomial<Rational>::constant(q(1));
    for (const auto& x : nodes) prod = prod.times_linear(x);
    CHECK(qs.back() == prod * prod);
  }
}

TEST_CASE("newton basis and q-family structural properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto vals = testutil::random_distinct_nodes(rng, n);
    NodeSet<Rational> ns(vals, q(-3), q(4));
    auto phi = newton_basis(ns);
    for (int j = 0; j < n; ++j) {
      CHECK(phi[static_cast<std::size_t>(j)].degree() == j);
      for (int i = 0; i < j; ++i)
        CHECK(phi[static_cast<std::size_t>(j)](ns.node(i)).is_zero());
      if (j + 1 < n)
        CHECK_FALSE(phi[static_cast<std::size_t>(j)](ns.node(j + 1)).is_zero());
    }
    auto qs = q_extension(ns, n);
    for (int j = n; j <= 2 * n; ++j) {
      const auto& qj = qs[static_cast<std::size_t>(j - n)];
      CHECK(qj.degree() == j);
      for (int i = 0; i < n; ++i) CHECK(qj(ns.node(i)).is_zero());
    }
  }
}

TEST_CASE("affine substitution expands p(alpha x + beta)") {
  auto x = Polynomial<Rational>::identity();
  CHECK(affine_substitute(x, q(2), q(1)) == poly({q(1), q(2)}));
  auto x2 = poly({q(0), q(0), q(1)});
  CHECK(affine_substitute(x2, q(1), q(-1)) == poly({q(1), q(-2), q(1)}));
  auto p = poly({q(0), q(-1), q(1)});  // x^2 - x
  CHECK(affine_substitute(p, q(1, 2), q(0)) == poly({q(0), q(-1, 2), q(1, 4)}));
  CHECK_THROWS_AS(affine_substitute(p, q(0), q(1)), std::invalid_argument);
}

TEST_CASE("nodes may lie outside the integration interval") {
  NodeSet<Rational> ns({q(0), q(-1), q(-2)}, q(0), q(1));
  CHECK(ns.size() == 3);
  CHECK(ns.lower() == q(0));
}
