#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quadgen/engine.hpp"

namespace quadgen {

enum class Family {
  ClosedNewtonCotes,
  OpenNewtonCotes,
  AdamsBashforth,
  AdamsMoulton,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::ClosedNewtonCotes: return "newton-cotes-closed";
    case Family::OpenNewtonCotes: return "newton-cotes-open";
    case Family::AdamsBashforth: return "adams-bashforth";
    case Family::AdamsMoulton: return "adams-moulton";
  }
  throw std::invalid_argument("family_name: unknown family");
}

struct FamilySpec {
  Family family;
  int n;
};

/// Error statement on the normalized nodes, kept symbolic in the step:
/// E_n(f) = h^h_power * coefficient * f^(derivative_order)(xi),
/// with h_power = derivative_order + 1 for these equally spaced families.
template <ScalarLike S>
struct ScaledError {
  S coefficient;
  int h_power;
  int derivative_order;
};

template <ScalarLike S>
struct FamilyRule {
  RuleResult<S> rule;  // on the normalized nodes
  ScaledError<S> scaled_error;
};

/// Normalized integer node layouts:
///   closed NC: t = 0..n-1 on [0, n-1]      (n >= 2)
///   open NC:   t = 1..n   on [0, n+1]
///   AB:        t = 0,-1,..,-(n-1) on [0,1]
///   AM:        t = 1,0,-1,..,2-n  on [0,1]
template <ScalarLike S>
NodeSet<S> normalized_nodes(const FamilySpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("normalized_nodes: need n >= 1");
  std::vector<S> t;
  t.reserve(static_cast<std::size_t>(spec.n));
  switch (spec.family) {
    case Family::ClosedNewtonCotes:
      if (spec.n < 2)
        throw std::invalid_argument("closed Newton-Cotes needs n >= 2 (both endpoints)");
      for (int i = 0; i < spec.n; ++i) t.emplace_back(static_cast<long>(i));
      return NodeSet<S>(std::move(t), S(0), S(spec.n - 1));
    case Family::OpenNewtonCotes:
      for (int i = 1; i <= spec.n; ++i) t.emplace_back(static_cast<long>(i));
      return NodeSet<S>(std::move(t), S(0), S(spec.n + 1));
    case Family::AdamsBashforth:
      for (int i = 0; i < spec.n; ++i) t.emplace_back(static_cast<long>(-i));
      return NodeSet<S>(std::move(t), S(0), S(1));
    case Family::AdamsMoulton:
      for (int i = 0; i < spec.n; ++i) t.emplace_back(static_cast<long>(1 - i));
      return NodeSet<S>(std::move(t), S(0), S(1));
  }
  throw std::invalid_argument("normalized_nodes: unknown family");
}

/// Runs the engine on the normalized layout with the uniform weight over
/// the normalized interval. Physical weights for step h are a_i = h * b_i
/// and the physical error carries h^{degree+2}.
template <ScalarLike S>
FamilyRule<S> build_family_rule(const FamilySpec& spec) {
  auto nodes = normalized_nodes<S>(spec);
  auto mp = MomentProvider<S>::uniform(nodes.lower(), nodes.upper());
  auto rule = build_rule(nodes, mp);
  ScaledError<S> err{rule.error_coefficient, rule.degree + 2, rule.degree + 1};
  return {std::move(rule), std::move(err)};
}

/// Concrete instantiation at anchor tau and step h > 0: nodes tau + h*t_i,
/// weights h * b_i.
template <ScalarLike S>
struct PhysicalRule {
  std::vector<S> nodes;
  std::vector<S> weights;
  S step;
};

template <ScalarLike S>
PhysicalRule<S> instantiate(const FamilyRule<S>& fam, const S& h, const S& tau) {
  if (!(h.sign() > 0)) throw std::invalid_argument("instantiate: step h must be > 0");
  PhysicalRule<S> out;
  out.step = h;
  const auto& nr = fam.rule.nodes;
  out.nodes.reserve(static_cast<std::size_t>(nr.size()));
  out.weights.reserve(static_cast<std::size_t>(nr.size()));
  for (int i = 0; i < nr.size(); ++i) {
    out.nodes.push_back(tau + h * nr.node(i));
    out.weights.push_back(h * fam.rule.weights[static_cast<std::size_t>(i)]);
  }
  return out;
}

/// Step made by posing the family on [a,b]: (b-a)/(n-1) closed NC,
/// (b-a)/(n+1) open NC; Adams rules integrate over one step so h = b-a.
template <ScalarLike S>
S step_for_interval(const FamilySpec& spec, const S& a, const S& b) {
  if (!(a < b)) throw std::invalid_argument("step_for_interval: requires a < b");
  switch (spec.family) {
    case Family::ClosedNewtonCotes: return (b - a) / S(spec.n - 1);
    case Family::OpenNewtonCotes: return (b - a) / S(spec.n + 1);
    case Family::AdamsBashforth:
    case Family::AdamsMoulton: return b - a;
  }
  throw std::invalid_argument("step_for_interval: unknown family");
}

}  // namespace quadgen
