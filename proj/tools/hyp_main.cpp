// Batch CLI for the hypergeometric library: single evaluations, suite runs
// against bundled reference values, and quadrature-rule dumps.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperg/dispatch.hpp"
#include "hyperg/harness.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/support.hpp"
#include "hyperg/confluent.hpp"
#include "hyperg/gauss.hpp"

using namespace hyperg;

namespace {

int run_eval(const std::string& kind, const std::string& a_s, const std::string& b_s,
             const std::string& c_s, const std::string& z_s, const std::string& method,
             const std::string& output) {
  auto a = parse_complex(a_s);
  auto b = parse_complex(b_s);
  auto z = parse_complex(z_s);
  std::optional<Cplx> c = kind == "f" ? parse_complex(c_s) : std::optional<Cplx>(Cplx{0, 0});
  if (!a || !b || !z || !c) {
    std::cerr << "error: could not parse complex parameter (use e.g. -0.5+1i)\n";
    return 1;
  }
  Policy pol = policy_from_env();

  EvalResult ev;
  if (method == "auto") {
    ev = (kind == "m") ? eval_m(*a, *b, *z, pol) : eval_f(*a, *b, *c, *z, pol);
  } else {
    // single named engine through the dispatcher's replay table
    TraceEntry entry;
    entry.kind = (kind == "m") ? 'M' : 'F';
    entry.method = (kind == "m" ? "m-" : "f-") + method;
    if (entry.method == "f-transform") entry.method = "f-transform@" + std::to_string(pol.rho);
    entry.params = {*a, *b, *c, *z};
    MethodResult r = replay_trace_entry(entry);
    entry.result = r;
    ev.trace.push_back(entry);
    ev.value = r.value;
    ev.status = r.status;
    ev.est_digits = estimate_digits(r, nullptr);
  }

  if (output == "csv") {
    std::cout << "value_re,value_im,status,est_digits,trace\n";
    std::cout << format_double(ev.value.real()) << "," << format_double(ev.value.imag()) << ","
              << status_name(ev.status) << "," << ev.est_digits << ",";
    for (std::size_t i = 0; i < ev.trace.size(); ++i) {
      std::cout << (i ? ">" : "") << ev.trace[i].method;
    }
    std::cout << "\n";
  } else if (output == "json-lines") {
    std::cout << "{\"value_re\":" << format_double(ev.value.real())
              << ",\"value_im\":" << format_double(ev.value.imag()) << ",\"status\":\""
              << status_name(ev.status) << "\",\"est_digits\":" << ev.est_digits
              << ",\"trace\":[";
    for (std::size_t i = 0; i < ev.trace.size(); ++i) {
      std::cout << (i ? "," : "") << "\"" << ev.trace[i].method << "\"";
    }
    std::cout << "]}\n";
  } else {
    std::cout << "value: " << format_complex(ev.value) << "\n";
    std::cout << "status: " << status_name(ev.status) << "\n";
    std::cout << "est_digits: " << ev.est_digits << "\n";
    std::cout << "trace:\n";
    for (const auto& e : ev.trace) {
      std::cout << "  " << e.method << "  (" << status_name(e.result.status) << ", value "
                << format_complex(e.result.value) << ", terms " << e.result.terms << ")\n";
    }
  }
  return ev.status == Status::Converged ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyp: confluent and Gauss hypergeometric function evaluator"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate M(a;b;z) or F(a,b;c;z)");
  std::string kind, a_s, b_s, c_s, z_s;
  std::string method = "auto", output = "human";
  eval->add_option("kind", kind, "m or f")->required()->check(CLI::IsMember({"m", "f"}));
  eval->add_option("--a", a_s, "parameter a")->required();
  eval->add_option("--b", b_s, "parameter b")->required();
  eval->add_option("--c", c_s, "parameter c (kind f only)");
  eval->add_option("--z", z_s, "variable z")->required();
  eval->add_option("--method", method,
                   "auto or an engine id (taylor-a, taylor-b, single-fraction, buchholz, "
                   "asymptotic-a, asymptotic-b, gauss-jacobi, buhring, taylor-z0, ode, ...)");
  eval->add_option("--output", output, "human, csv, or json-lines")
      ->check(CLI::IsMember({"human", "csv", "json-lines"}));

  // suite
  auto* suite = app.add_subcommand("suite", "replay a case file against reference values");
  std::string cases_path = "data/cases_m.csv", refs_path = "data/refs.csv", mode_s = "auto";
  suite->add_option("--cases", cases_path, "case CSV path");
  suite->add_option("--refs", refs_path, "reference CSV path");
  suite->add_option("--mode", mode_s, "auto or per-method")
      ->check(CLI::IsMember({"auto", "per-method"}));

  // rule
  auto* rule = app.add_subcommand("rule", "dump a Gauss-Jacobi rule as CSV");
  double alpha = 0.0, beta = 0.0;
  int n = 8;
  rule->add_option("--alpha", alpha, "Jacobi exponent on (1-t)")->required();
  rule->add_option("--beta", beta, "Jacobi exponent on (1+t)")->required();
  rule->add_option("--n", n, "number of nodes")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      if (kind == "f" && c_s.empty()) {
        std::cerr << "error: kind f requires --c\n";
        return 1;
      }
      return run_eval(kind, a_s, b_s, c_s, z_s, method, output);
    }
    if (*suite) {
      SuiteMode mode = (mode_s == "auto") ? SuiteMode::Auto : SuiteMode::PerMethod;
      SuiteReport report = run_suite(cases_path, refs_path, mode, policy_from_env());
      std::cout << format_report(report, mode);
      return 0;
    }
    if (*rule) {
      QuadratureRule r = gauss_jacobi_rule(alpha, beta, n);
      std::cout << "node,weight\n";
      for (int i = 0; i < r.n; ++i) {
        std::cout << format_double(r.nodes[i]) << "," << format_double(r.weights[i]) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
