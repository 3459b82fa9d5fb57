#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "quadgen/classical.hpp"
#include "quadgen/engine.hpp"
#include "quadgen/gaussian.hpp"
#include "quadgen/oracle.hpp"
#include "quadgen/output.hpp"

namespace {

using namespace quadgen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<Family> classical_family(const std::string& name) {
  if (name == "newton-cotes-closed") return Family::ClosedNewtonCotes;
  if (name == "newton-cotes-open") return Family::OpenNewtonCotes;
  if (name == "adams-bashforth") return Family::AdamsBashforth;
  if (name == "adams-moulton") return Family::AdamsMoulton;
  return std::nullopt;
}

bool known_family(const std::string& name) {
  return classical_family(name).has_value() || name == "gauss-legendre" ||
         name == "custom";
}

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, pos));
      hi = std::stoi(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid n range \"" + text + "\" (expected N or A..B)");
  }
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("invalid n range \"" + text + "\"");
  return {lo, hi};
}

void emit(const OutputDocument& doc, const std::string& format) {
  if (format == "json")
    std::cout << doc.to_json_string();
  else if (format == "csv")
    std::cout << doc.to_csv();
  else
    std::cout << doc.to_table();
}

struct CommonOptions {
  std::string family;
  std::string n_text = "1";
  int digits = 0;  // 0: keep the 384-bit default
  std::string format = "json";
  bool exact = false;
};

Precision chosen_precision(int digits) {
  return digits > 0 ? Precision::from_decimal_digits(digits)
                    : BigFloat::default_precision();
}

// -- rule ----------------------------------------------------------------

int run_rule(const CommonOptions& opt, const std::string& nodes_text,
             const std::string& interval_text) {
  if (!known_family(opt.family)) {
    std::cerr << "unknown family \"" << opt.family << "\"\n";
    return kExitUsage;
  }
  auto [n, n_hi] = parse_range(opt.n_text);
  if (n != n_hi) {
    std::cerr << "rule takes a single --n\n";
    return kExitUsage;
  }

  if (opt.family == "custom") {
    if (nodes_text.empty() || interval_text.empty()) {
      std::cerr << "custom rules need --nodes and --interval\n";
      return kExitUsage;
    }
    auto node_items = split(nodes_text, ',');
    auto iv = split(interval_text, ',');
    if (iv.size() != 2) {
      std::cerr << "--interval expects \"a,b\"\n";
      return kExitUsage;
    }
    std::vector<Rational> rat_nodes;
    for (const auto& item : node_items) rat_nodes.push_back(Rational::parse(item));
    Rational a = Rational::parse(iv[0]), b = Rational::parse(iv[1]);
    if (opt.exact) {
      NodeSet<Rational> ns(std::move(rat_nodes), a, b);
      auto mp = MomentProvider<Rational>::uniform(ns.lower(), ns.upper());
      emit(make_document("custom", build_rule(ns, mp)), opt.format);
    } else {
      PrecisionScope scope(chosen_precision(opt.digits));
      std::vector<BigFloat> nodes;
      for (const auto& q : rat_nodes) nodes.emplace_back(q);
      NodeSet<BigFloat> ns(std::move(nodes), BigFloat(a), BigFloat(b));
      auto mp = MomentProvider<BigFloat>::uniform(ns.lower(), ns.upper());
      emit(make_document("custom", build_rule(ns, mp)), opt.format);
    }
    return kExitOk;
  }

  if (opt.family == "gauss-legendre") {
    if (opt.exact) {
      std::cerr << "gauss-legendre nodes are irrational; --exact is not available\n";
      return kExitUsage;
    }
    auto g = gauss_legendre_rule(n, chosen_precision(opt.digits));
    emit(make_document("gauss-legendre", g.rule), opt.format);
    return kExitOk;
  }

  FamilySpec spec{*classical_family(opt.family), n};
  if (opt.exact) {
    auto fam = build_family_rule<Rational>(spec);
    emit(make_document(opt.family, fam.rule, fam.scaled_error.h_power), opt.format);
  } else {
    PrecisionScope scope(chosen_precision(opt.digits));
    auto fam = build_family_rule<BigFloat>(spec);
    emit(make_document(opt.family, fam.rule, fam.scaled_error.h_power), opt.format);
  }
  return kExitOk;
}

// -- verify --------------------------------------------------------------

bool weights_match(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool weights_match(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b) {
  // the monomial Vandermonde route is itself ill-conditioned, so demand
  // agreement only to half the working digits
  const BigFloat tol =
      BigFloat::pow10(-(BigFloat::default_precision().decimal_digits() / 2));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(abs(a[i] - b[i]) <= tol)) return false;
  return true;
}

bool sum_matches(const Rational& sum, long expected) { return sum == expected; }

bool sum_matches(const BigFloat& sum, long expected) {
  const BigFloat tol =
      BigFloat::pow10(-(BigFloat::default_precision().decimal_digits() - 10));
  return abs(sum - BigFloat(expected)) <= tol;
}

bool values_match(const Rational& a, const Rational& b) { return a == b; }

bool values_match(const BigFloat& a, const BigFloat& b) {
  const BigFloat tol =
      BigFloat::pow10(-(BigFloat::default_precision().decimal_digits() - 10));
  return abs(a - b) <= tol;
}

struct CheckLine {
  std::string name;
  bool ok;
};

void print_row(int n, const std::vector<CheckLine>& checks, bool& all_ok) {
  bool row_ok = true;
  std::string detail;
  for (const auto& c : checks) {
    row_ok = row_ok && c.ok;
    detail += "  " + c.name + (c.ok ? ":ok" : ":FAIL");
  }
  all_ok = all_ok && row_ok;
  std::printf("n=%-3d %s%s\n", n, row_ok ? "pass" : "FAIL", detail.c_str());
}

template <ScalarLike S>
std::vector<CheckLine> verify_classical_one(Family family, int n) {
  FamilySpec spec{family, n};
  auto fam = build_family_rule<S>(spec);
  const auto& rule = fam.rule;
  auto mp = MomentProvider<S>::uniform(rule.nodes.lower(), rule.nodes.upper());
  auto report = oracle::analyze(rule.nodes, mp);

  std::vector<CheckLine> checks;
  checks.push_back({"weights-vs-oracle", weights_match(rule.weights, report.weights)});
  checks.push_back({"degree-vs-probe", rule.degree == report.detected_degree});

  S sum{};
  for (const auto& w : rule.weights) sum += w;

  switch (family) {
    case Family::ClosedNewtonCotes: {
      const int expected = (n % 2 == 0) ? n - 1 : n;
      checks.push_back({"degree-parity", rule.degree == expected});
      bool palindrome = true;
      for (int i = 0; i < n / 2; ++i)
        palindrome = palindrome &&
                     values_match(rule.weights[static_cast<std::size_t>(i)],
                                  rule.weights[static_cast<std::size_t>(n - 1 - i)]);
      checks.push_back({"palindromic-weights", palindrome});
      checks.push_back({"weight-sum", sum_matches(sum, n - 1)});
      break;
    }
    case Family::OpenNewtonCotes:
      checks.push_back({"weight-sum", sum_matches(sum, n + 1)});
      break;
    case Family::AdamsBashforth:
    case Family::AdamsMoulton:
      checks.push_back({"degree-n-minus-1", rule.degree == n - 1});
      checks.push_back({"weight-sum", sum_matches(sum, 1)});
      break;
  }
  checks.push_back({"h-power", fam.scaled_error.h_power == rule.degree + 2});
  return checks;
}

std::vector<CheckLine> verify_gauss_one(int n, Precision prec) {
  // gauss_legendre_rule already enforces degree 2n-1, positivity, the
  // weight sum, and the orthogonality consistency; a throw lands as a FAIL row.
  auto g = gauss_legendre_rule(n, prec);
  PrecisionScope scope(prec);
  auto mp = MomentProvider<BigFloat>::legendre_weight();
  auto vw = oracle::vandermonde_weights(g.rule.nodes, mp);
  // probe at half the working digits: the triangular solve and the
  // Vandermonde route both amplify rounding, so the weights cannot satisfy
  // the moment equations at full precision for larger n
  const BigFloat probe_tol = BigFloat::pow10(-(prec.decimal_digits() / 2));
  int probed = oracle::probe_degree(g.rule.nodes, g.rule.weights, mp, 2 * n, probe_tol);

  std::vector<CheckLine> checks;
  checks.push_back({"degree-2n-1", g.rule.degree == 2 * n - 1});
  checks.push_back({"weights-vs-oracle", weights_match(g.rule.weights, vw)});
  checks.push_back({"degree-vs-probe", probed == 2 * n - 1});
  bool symmetric = true;
  const BigFloat tol = BigFloat::pow10(-(prec.decimal_digits() - 10));
  for (int i = 0; i < n / 2; ++i)
    symmetric = symmetric &&
                abs(g.rule.nodes.node(i) + g.rule.nodes.node(n - 1 - i)) <= tol;
  checks.push_back({"node-symmetry", symmetric});
  return checks;
}

int run_verify(const CommonOptions& opt) {
  if (!known_family(opt.family) || opt.family == "custom") {
    std::cerr << "verify expects a named family\n";
    return kExitUsage;
  }
  auto [lo, hi] = parse_range(opt.n_text);
  bool all_ok = true;

  if (opt.family == "gauss-legendre") {
    if (opt.exact) {
      std::cerr << "gauss-legendre nodes are irrational; --exact is not available\n";
      return kExitUsage;
    }
    Precision prec = chosen_precision(opt.digits);
    for (int n = lo; n <= hi; ++n) {
      try {
        print_row(n, verify_gauss_one(n, prec), all_ok);
      } catch (const std::exception& e) {
        all_ok = false;
        std::printf("n=%-3d FAIL  %s\n", n, e.what());
      }
    }
  } else {
    Family family = *classical_family(opt.family);
    int lo_eff = lo;
    if (family == Family::ClosedNewtonCotes && lo_eff < 2) lo_eff = 2;
    for (int n = lo_eff; n <= hi; ++n) {
      try {
        if (opt.exact) {
          print_row(n, verify_classical_one<Rational>(family, n), all_ok);
        } else {
          PrecisionScope scope(chosen_precision(opt.digits));
          print_row(n, verify_classical_one<BigFloat>(family, n), all_ok);
        }
      } catch (const std::exception& e) {
        all_ok = false;
        std::printf("n=%-3d FAIL  %s\n", n, e.what());
      }
    }
  }
  std::printf("%s\n", all_ok ? "all checks passed" : "verification failed");
  return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadgen: polynomial quadrature rules, degrees of precision and error coefficients"};
  app.require_subcommand(1);

  CommonOptions rule_opt, verify_opt;
  std::string nodes_text, interval_text;

  auto* rule_cmd = app.add_subcommand(
      "rule", "compute one rule and emit its table (json/csv/table)");
  rule_cmd->add_option("family", rule_opt.family,
                       "newton-cotes-closed | newton-cotes-open | adams-bashforth | "
                       "adams-moulton | gauss-legendre | custom")
      ->required();
  rule_cmd->add_option("--n", rule_opt.n_text, "number of nodes");
  rule_cmd->add_option("--digits", rule_opt.digits,
                       "bigfloat precision in decimal digits (default ~116)");
  rule_cmd->add_option("--format", rule_opt.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  rule_cmd->add_flag("--exact", rule_opt.exact,
                     "exact rational arithmetic (rational nodes only)");
  rule_cmd->add_option("--nodes", nodes_text, "custom nodes, e.g. 0,1/2,1");
  rule_cmd->add_option("--interval", interval_text, "custom interval, e.g. 0,1");

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check a family against the brute-force oracle");
  verify_cmd->add_option("family", verify_opt.family, "family to verify")->required();
  verify_cmd->add_option("--n", verify_opt.n_text, "node count or range A..B");
  verify_cmd->add_option("--digits", verify_opt.digits,
                         "bigfloat precision in decimal digits");
  verify_cmd->add_flag("--exact", verify_opt.exact, "exact rational arithmetic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rule_cmd->parsed()) return run_rule(rule_opt, nodes_text, interval_text);
    return run_verify(verify_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
