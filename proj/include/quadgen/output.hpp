#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadgen/engine.hpp"

namespace quadgen {

/// Machine-readable rule table. JSON is the canonical format and
/// round-trips byte-identically; CSV and a human table derive from the
/// same fields. Scalars are carried as their decimal serializations
/// ("p/q" for rationals, scientific notation for bigfloats), index-aligned
/// with the node order.
struct OutputDocument {
  std::string rule;
  int n = 0;
  std::string arithmetic;                  // "rational" | "bigfloat"
  std::optional<int> precision_digits;     // bigfloat only
  std::vector<std::string> nodes;
  std::vector<std::string> weights;
  int degree = 0;
  struct ErrorInfo {
    std::string coefficient;
    int derivative_order = 0;
    std::optional<int> h_power;  // equally spaced families only
  } error;
  struct Diagnostics {
    std::string diag_det;
    bool conditioning_warning = false;
    std::vector<std::string> i_q_list;  // I(q_n) .. I(q_{degree+1})
  } diagnostics;

  std::string to_json_string() const;
  static OutputDocument from_json_string(const std::string& text);

  std::string to_csv() const;
  std::string to_table() const;
};

template <ScalarLike S>
OutputDocument make_document(const std::string& rule_name, const RuleResult<S>& r,
                             std::optional<int> h_power = std::nullopt) {
  OutputDocument doc;
  doc.rule = rule_name;
  doc.n = r.nodes.size();
  doc.arithmetic = r.arithmetic.flavor;
  if (r.arithmetic.flavor == "bigfloat")
    doc.precision_digits = r.arithmetic.precision_digits;
  for (const auto& x : r.nodes.nodes()) doc.nodes.push_back(x.to_string());
  for (const auto& w : r.weights) doc.weights.push_back(w.to_string());
  doc.degree = r.degree;
  doc.error.coefficient = r.error_coefficient.to_string();
  doc.error.derivative_order = r.derivative_order;
  doc.error.h_power = h_power;
  doc.diagnostics.diag_det = r.diag_det.to_string();
  doc.diagnostics.conditioning_warning = r.conditioning_warning;
  for (const auto& v : r.iq_values) doc.diagnostics.i_q_list.push_back(v.to_string());
  return doc;
}

}  // namespace quadgen
