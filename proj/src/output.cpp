#include "quadgen/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace quadgen {

using ordered_json = nlohmann::ordered_json;

std::string OutputDocument::to_json_string() const {
  ordered_json j;
  j["rule"] = rule;
  j["n"] = n;
  j["arithmetic"] = arithmetic;
  if (precision_digits) j["precision_digits"] = *precision_digits;
  j["nodes"] = nodes;
  j["weights"] = weights;
  j["degree"] = degree;
  ordered_json je;
  je["coefficient"] = error.coefficient;
  je["derivative_order"] = error.derivative_order;
  if (error.h_power) je["h_power"] = *error.h_power;
  j["error"] = je;
  ordered_json jd;
  jd["diag_det"] = diagnostics.diag_det;
  jd["conditioning_warning"] = diagnostics.conditioning_warning;
  jd["I_q_list"] = diagnostics.i_q_list;
  j["diagnostics"] = jd;
  return j.dump(2) + "\n";
}

OutputDocument OutputDocument::from_json_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  OutputDocument d;
  d.rule = j.at("rule").get<std::string>();
  d.n = j.at("n").get<int>();
  d.arithmetic = j.at("arithmetic").get<std::string>();
  if (j.contains("precision_digits"))
    d.precision_digits = j.at("precision_digits").get<int>();
  d.nodes = j.at("nodes").get<std::vector<std::string>>();
  d.weights = j.at("weights").get<std::vector<std::string>>();
  d.degree = j.at("degree").get<int>();
  const auto& je = j.at("error");
  d.error.coefficient = je.at("coefficient").get<std::string>();
  d.error.derivative_order = je.at("derivative_order").get<int>();
  if (je.contains("h_power")) d.error.h_power = je.at("h_power").get<int>();
  const auto& jd = j.at("diagnostics");
  d.diagnostics.diag_det = jd.at("diag_det").get<std::string>();
  d.diagnostics.conditioning_warning = jd.at("conditioning_warning").get<bool>();
  d.diagnostics.i_q_list = jd.at("I_q_list").get<std::vector<std::string>>();
  return d;
}

std::string OutputDocument::to_csv() const {
  std::ostringstream os;
  os << "# rule=" << rule << " n=" << n << " arithmetic=" << arithmetic;
  if (precision_digits) os << " precision_digits=" << *precision_digits;
  os << " degree=" << degree << " error_coefficient=" << error.coefficient
     << " derivative_order=" << error.derivative_order;
  if (error.h_power) os << " h_power=" << *error.h_power;
  os << "\nindex,node,weight\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << (i + 1) << "," << nodes[i] << "," << weights[i] << "\n";
  return os.str();
}

std::string OutputDocument::to_table() const {
  std::ostringstream os;
  os << "rule: " << rule << "   n = " << n << "   arithmetic: " << arithmetic;
  if (precision_digits) os << " (" << *precision_digits << " digits)";
  os << "\ndegree of precision: " << degree << "\n";
  os << "error: E(f) = ";
  if (error.h_power) os << "h^" << *error.h_power << " * ";
  os << "(" << error.coefficient << ") * f^(" << error.derivative_order << ")(xi)\n";
  os << "conditioning det: " << diagnostics.diag_det
     << (diagnostics.conditioning_warning ? "   [ill-conditioned]" : "") << "\n";
  std::size_t wn = 4, ww = 6;
  for (const auto& s : nodes) wn = std::max(wn, s.size());
  for (const auto& s : weights) ww = std::max(ww, s.size());
  os << "  i  " << std::string(wn > 4 ? wn - 4 : 0, ' ') << "node  "
     << std::string(ww > 6 ? ww - 6 : 0, ' ') << "weight\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string idx = std::to_string(i + 1);
    os << std::string(idx.size() < 3 ? 3 - idx.size() : 0, ' ') << idx << "  "
       << std::string(wn - nodes[i].size(), ' ') << nodes[i] << "  "
       << std::string(ww - weights[i].size(), ' ') << weights[i] << "\n";
  }
  return os.str();
}

}  // namespace quadgen
