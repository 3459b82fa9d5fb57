#pragma once

#include <random>
#include <utility>
#include <vector>

#include "quadgen/scalar.hpp"

namespace testutil {

using quadgen::Rational;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

/// Random rational in [-3, 3] with small denominator.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den_dist(1, 8);
  const long d = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-3 * d, 3 * d);
  return Rational(num_dist(rng), d);
}

/// n pairwise distinct random rationals in [-3, 3].
inline std::vector<Rational> random_distinct_nodes(std::mt19937_64& rng, int n) {
  std::vector<Rational> nodes;
  while (static_cast<int>(nodes.size()) < n) {
    Rational c = random_rational(rng);
    bool fresh = true;
    for (const auto& x : nodes) fresh = fresh && !(x == c);
    if (fresh) nodes.push_back(c);
  }
  return nodes;
}

/// Random rational interval with a < b, endpoints in [-3, 3].
inline std::pair<Rational, Rational> random_interval(std::mt19937_64& rng) {
  while (true) {
    Rational a = random_rational(rng), b = random_rational(rng);
    if (a < b) return {a, b};
    if (b < a) return {b, a};
  }
}

}  // namespace testutil
