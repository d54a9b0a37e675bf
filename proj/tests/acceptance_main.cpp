// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit code 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hyperg/confluent.hpp"
#include "hyperg/dispatch.hpp"
#include "hyperg/gauss.hpp"
#include "hyperg/harness.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/recurrence.hpp"
#include "hyperg/support.hpp"
#include "oracle_values.hpp"

using namespace hyperg;

namespace {

const std::string kCasesM = std::string(HYPERG_DATA_DIR) + "/cases_m.csv";
const std::string kCasesF = std::string(HYPERG_DATA_DIR) + "/cases_f.csv";
const std::string kRefs = std::string(HYPERG_DATA_DIR) + "/refs.csv";

int g_failures = 0;
std::vector<std::string> g_notes;

void report(int idx, bool pass, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", idx, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++g_failures;
  for (const auto& n : g_notes) std::printf("    %s\n", n.c_str());
  g_notes.clear();
}

double relerr(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
double digits(Cplx got, Cplx want) {
  if (!is_finite(got)) return 0.0;
  return std::min(16.0, std::max(0.0, -std::log10(std::max(relerr(got, want), 1e-17))));
}

// published digit tables; -1 = A, -2 = B, -3 = C
constexpr int A = -1, B = -2, C = -3;
const int kTableM[40][7] = {
    {16, 16, 16, A, A, A, 16},  {16, 16, 16, 16, A, A, C},  {16, 16, 16, A, A, A, 15},
    {16, 16, 15, 15, A, A, C},  {16, 16, 15, 9, A, A, C},   {8, 15, 15, 0, A, A, C},
    {15, 16, 15, 5, A, A, C},   {15, 15, 15, 15, 16, 16, 14}, {16, 16, 15, A, A, A, B},
    {15, 16, 0, 13, 15, 15, 13}, {A, A, 0, A, 16, 16, 12},  {16, 15, 15, 15, A, A, C},
    {0, 0, 0, 14, A, A, C},     {15, 15, 15, 15, A, A, C},  {0, 0, 0, 15, A, A, C},
    {16, 16, 16, 15, A, A, C},  {16, 16, 16, 16, A, A, C},  {A, A, 0, A, 16, 16, 13},
    {0, 0, 0, 16, A, A, C},     {0, 0, 0, 15, A, A, C},     {6, 6, 6, 8, A, A, C},
    {16, 16, 15, 8, A, A, C},   {5, 5, 5, 8, A, A, C},      {0, 0, B, A, A, A, C},
    {14, 14, 14, 15, A, A, C},  {15, 16, 0, A, 15, 15, 0},  {14, 14, 14, A, A, A, C},
    {0, 0, B, A, 14, 14, C},    {14, 15, 15, A, 14, 14, C}, {A, 0, A, A, B, B, C},
    {A, A, B, A, 15, 15, C},    {15, 15, 15, A, 15, 15, C}, {0, 15, 15, A, A, A, C},
    {4, 15, 16, 12, A, A, C},   {4, 15, 15, 11, A, A, C},   {15, 15, 15, 0, A, A, C},
    {A, A, 0, A, A, A, C},      {A, A, 0, A, A, A, C},      {A, 1, A, 0, A, A, C},
    {16, 16, 15, A, A, A, C},
};
const int kTableF[30][5] = {
    {16, 16, 16, 16, A}, {16, 16, 16, 15, A}, {16, 16, 16, C, 16}, {15, 15, 15, C, A},
    {16, 16, 16, C, 12}, {15, 15, 15, C, A},  {16, 16, 15, C, A},  {14, 15, A, C, A},
    {A, A, A, B, A},     {16, 16, 15, 16, 0}, {8, 8, 8, C, A},     {16, 16, 16, C, A},
    {0, 0, 0, C, A},     {A, A, B, C, A},     {14, 14, 0, C, A},   {0, 0, 0, C, A},
    {A, A, 0, C, A},     {0, 0, 0, 13, A},    {0, 0, 0, C, A},     {0, 0, B, 6, A},
    {3, 3, A, B, A},     {16, 16, 16, B, A},  {A, A, 0, C, 16},    {A, A, A, 0, A},
    {A, A, 3, 14, 11},   {A, A, 5, 14, 11},   {16, 16, 16, 15, 16}, {A, A, A, 14, 16},
    {A, A, A, C, A},     {A, A, A, 15, 16},
};

// A cell conforms when the published digits D >= 14 are matched to D-2, and
// published failure letters are matched by any truthful failure status, a
// result of >= 14 real digits, or a reference comparison exposing <= 2
// digits (the published tables use the same convention for wrong converged
// values). Entries below 14 digits carry no constraint.
bool cell_conforms(int want, const Cell& got, std::string& why) {
  if (want >= 14) {
    if (got.is_letter()) {
      why = "expected >= " + std::to_string(want - 2) + " digits, got status " + got.text();
      return false;
    }
    if (got.digits < want - 2) {
      why = "expected >= " + std::to_string(want - 2) + " digits, got " + std::to_string(got.digits);
      return false;
    }
    return true;
  }
  if (want < 0) {
    if (got.is_letter()) return true;
    if (got.digits >= 14 || got.digits <= 2) return true;
    why = "expected a failure label, got a converged value with " +
          std::to_string(got.digits) + " digits";
    return false;
  }
  return true;
}

void criterion_per_method(int idx, const std::string& cases_path, const int* table, int rows,
                          int cols, double* out_ms) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite(cases_path, kRefs, SuiteMode::PerMethod);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (out_ms) *out_ms = ms;
  bool pass = int(rep.rows.size()) == rows;
  for (int r = 0; r < rows && r < int(rep.rows.size()); ++r) {
    for (int c = 0; c < cols; ++c) {
      std::string why;
      if (!cell_conforms(table[r * cols + c], rep.rows[r].cells[c], why)) {
        pass = false;
        g_notes.push_back("case " + std::to_string(r + 1) + " column " + rep.columns[c] + ": " +
                          why);
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "per-method reproduction (%c): %d cases x %d columns, %.0f ms", rep.kind, rows,
                cols, ms);
  report(idx, pass, buf);
}

struct AutoOutcome {
  Status status;
  int est_digits;
  double true_digits;
};

AutoOutcome run_auto(const TestCase& tc, const ReferenceRecord& ref) {
  EvalResult ev = (tc.kind == 'M') ? eval_m(tc.params.a, tc.params.b, tc.params.z)
                                   : eval_f(tc.params.a, tc.params.b, tc.params.c, tc.params.z);
  AutoOutcome out{ev.status, ev.est_digits, 0.0};
  if (ev.status == Status::Converged) {
    Cplx compare = ev.value;
    if (ref.unregularized) {
      Cplx g = tc.kind == 'M' ? tc.params.b : tc.params.c;
      ExpCombine e = exp_scaled(log_gamma(g), compare);
      compare = e.overflow ? Cplx{std::numeric_limits<double>::infinity(), 0} : e.value;
    }
    out.true_digits = digits(compare, ref.value);
  }
  return out;
}

}  // namespace

int main() {
  // 1 & 2: per-method grids against the published tables
  double ms_m = 0.0;
  criterion_per_method(1, kCasesM, &kTableM[0][0], 40, 7, &ms_m);
  if (ms_m >= 30000.0) {
    g_notes.push_back("suite runtime exceeded 30 s");
    report(1, false, "runtime gate");
  }
  criterion_per_method(2, kCasesF, &kTableF[0][0], 30, 5, nullptr);

  // 3: dispatcher coverage
  {
    auto cm = load_cases(kCasesM);
    auto cf = load_cases(kCasesF);
    auto refs = load_refs(kRefs);
    std::map<std::pair<char, int>, const ReferenceRecord*> ref_index;
    for (const auto& r : refs) ref_index[{r.kind, r.id}] = &r;
    const std::vector<int> m_required = {1, 2, 3,  4,  5,  6,  7,  8,  10, 12,
                                         13, 14, 15, 16, 22, 25, 33, 34, 35, 36};
    const std::vector<int> f_required = {1,  2,  3,  4,  5,  6,  7,  8, 10,
                                         12, 23, 25, 26, 27, 28, 29, 30};
    bool pass = true;
    auto run_side = [&](const std::vector<TestCase>& cases, const std::vector<int>& required,
                        char kind) {
      for (const auto& tc : cases) {
        AutoOutcome out = run_auto(tc, *ref_index.at({kind, tc.id}));
        bool req = std::find(required.begin(), required.end(), tc.id) != required.end();
        if (req) {
          if (out.status != Status::Converged || out.true_digits < 10.0) {
            pass = false;
            g_notes.push_back(std::string(1, kind) + std::to_string(tc.id) + ": required >= 10 digits, got " +
                              (out.status == Status::Converged
                                   ? std::to_string(out.true_digits) + " digits"
                                   : std::string(status_name(out.status))));
          }
        }
        if (out.status == Status::Converged && out.est_digits >= 10 && out.true_digits < 10.0) {
          pass = false;
          g_notes.push_back(std::string(1, kind) + std::to_string(tc.id) +
                            ": claimed est_digits " + std::to_string(out.est_digits) +
                            " but achieved " + std::to_string(out.true_digits));
        }
      }
    };
    run_side(cm, m_required, 'M');
    run_side(cf, f_required, 'F');
    report(3, pass, "dispatcher coverage and truthfulness over all 70 cases");
  }

  // 4: cancellation showcase
  {
    EvalResult ev = eval_m(50, 20, -100);
    bool routed = false;
    for (const auto& e : ev.trace) {
      if (e.method == "m-kummer-term") routed = true;
    }
    double d = ev.status == Status::Converged ? digits(ev.value, oracle::M_50_20_m100) : 0.0;
    MethodResult direct = m_taylor_a({50, 20, -100});
    double ddirect =
        direct.ok() ? digits(direct.value, oracle::M_50_20_m100) : 0.0;
    bool pass = routed && d >= 10.0 && ddirect <= 2.0;
    if (!pass) {
      g_notes.push_back("route used: " + std::string(routed ? "recursion" : "other") +
                        ", digits " + std::to_string(d) + ", direct Taylor digits " +
                        std::to_string(ddirect));
    }
    report(4, pass, "1F1(50;20;-100) via the real-case recursion route");
  }

  // 5: identity suites, 500 points each, fixed seeds, zero failures
  {
    bool pass = true;
    int fail_kummer = 0, fail_euler = 0, fail_pfaff = 0, fail_gauss1 = 0, fail_deriv = 0;
    {
      std::mt19937 rng(101);
      std::uniform_real_distribution<double> ua(-5.0, 5.0), ub(2.0, 11.0), ui(-1.5, 1.5),
          uz(-8.0, 8.0);
      for (int i = 0; i < 500; ++i) {
        Cplx a{ua(rng), ui(rng)}, b{ub(rng), ui(rng)}, z{uz(rng), ui(rng) * 0.5};
        EvalResult lhs = eval_m(a, b, z);
        EvalResult rhs = eval_m(b - a, b, -z);
        if (lhs.status != Status::Converged || rhs.status != Status::Converged ||
            relerr(lhs.value, std::exp(z) * rhs.value) > 1e-11) {
          ++fail_kummer;
        }
      }
    }
    {
      std::mt19937 rng(103);
      std::uniform_real_distribution<double> u(-4.0, 4.0), uc(4.5, 10.0), ui(-1.5, 1.5),
          uz(-0.55, 0.55);
      for (int i = 0; i < 500; ++i) {
        Cplx a{u(rng), ui(rng)}, b{u(rng), ui(rng)}, c{uc(rng), ui(rng)};
        Cplx z{uz(rng), uz(rng)};
        EvalResult lhs = eval_f(a, b, c, z);
        EvalResult rhs = eval_f(c - a, c - b, c, z);
        Cplx rv = std::exp((c - a - b) * std::log(Cplx{1, 0} - z));
        if (lhs.status != Status::Converged || rhs.status != Status::Converged ||
            relerr(lhs.value, rv * rhs.value) > 1e-11) {
          ++fail_euler;
        }
        EvalResult prhs = eval_f(a, c - b, c, z / (z - 1.0));
        Cplx pv = std::exp(-a * std::log(Cplx{1, 0} - z));
        if (lhs.status != Status::Converged || prhs.status != Status::Converged ||
            relerr(lhs.value, pv * prhs.value) > 1e-11) {
          ++fail_pfaff;
        }
      }
    }
    {
      std::mt19937 rng(107);
      std::uniform_real_distribution<double> u(0.2, 2.0), ui(-0.5, 0.5);
      for (int i = 0; i < 500; ++i) {
        Cplx a{u(rng), ui(rng)}, b{u(rng), ui(rng)};
        Cplx c = a + b + Cplx{1.5 + u(rng), ui(rng)};
        MethodResult at1 = f_at_one(a, b, c);
        EvalResult near1 = eval_f(a, b, c, {1.0 - 1e-8, 0});
        if (!at1.ok() || near1.status != Status::Converged ||
            relerr(near1.value, at1.value) > 1e-6) {
          ++fail_gauss1;
        }
      }
    }
    {
      std::mt19937 rng(109);
      std::uniform_real_distribution<double> u(-3.0, 3.0), uc(2.0, 8.0), ui(-1.0, 1.0),
          uz(-0.5, 0.5);
      for (int i = 0; i < 100; ++i) {
        Cplx a{u(rng), ui(rng)}, b{u(rng), ui(rng)}, c{uc(rng), ui(rng)};
        Cplx z{uz(rng), uz(rng)};
        double h = 1e-5;
        MethodResult fp = f_taylor_a({a, b, c, z + h});
        MethodResult fm = f_taylor_a({a, b, c, z - h});
        MethodResult fd = f_taylor_a({a + 1.0, b + 1.0, c + 1.0, z});
        if (!fp.ok() || !fm.ok() || !fd.ok()) {
          ++fail_deriv;
          continue;
        }
        Cplx diff = (fp.value - fm.value) / (2.0 * h);
        Cplx want = a * b * fd.value;
        double scale = std::max(std::abs(want), 1e-8);
        if (std::abs(diff - want) / scale > 1e-6) ++fail_deriv;
      }
    }
    if (fail_kummer + fail_euler + fail_pfaff + fail_gauss1 + fail_deriv > 0) {
      pass = false;
      g_notes.push_back("failures: kummer " + std::to_string(fail_kummer) + ", euler " +
                        std::to_string(fail_euler) + ", pfaff " + std::to_string(fail_pfaff) +
                        ", gauss@1 " + std::to_string(fail_gauss1) + ", derivative " +
                        std::to_string(fail_deriv));
    }
    report(5, pass, "identity suites (Kummer, Euler, Pfaff, value at 1, derivative)");
  }

  // 6: recurrence machinery
  {
    bool pass = true;
    RecurrenceSpec cs;
    cs.coeff_a = [](int) { return Cplx{1, 0}; };
    cs.coeff_b = [](int) { return Cplx{-2.5, 0}; };
    cs.limit_a = Cplx{1, 0};
    cs.limit_b = Cplx{-2.5, 0};
    cs.normalization = Cplx{1, 0};
    CharRoots roots = characteristic_roots(cs);
    if (relerr(roots.t1, {0.5, 0}) > 1e-13 || relerr(roots.t2, {2.0, 0}) > 1e-13) {
      pass = false;
      g_notes.push_back("constant-coefficient roots missed");
    }
    MethodResult f5m = miller(cs, 5, 1e-14);
    MethodResult f5o = olver(cs, 5, 1e-14);
    if (!f5m.ok() || !f5o.ok() || relerr(f5m.value, {0.03125, 0}) > 1e-13 ||
        relerr(f5o.value, {0.03125, 0}) > 1e-13) {
      pass = false;
      g_notes.push_back("constant-coefficient minimal value missed");
    }
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> u(0.5, 6.0), ui(-1.0, 1.0);
    int agree = 0, tried = 0;
    while (agree < 100 && tried < 400) {
      ++tried;
      Cplx a{u(rng), ui(rng)}, b{u(rng) + 1.0, ui(rng)}, z{-u(rng) - 1.0, ui(rng)};
      MethodResult base = m_taylor_a({a, b, z});
      if (!base.ok() || base.est_error > 1e-13) continue;
      RecurrenceSpec spec = m_spec_plusplus(a, b, z);
      spec.normalization = base.value;
      int k = 3 + (tried % 7);
      MethodResult mi = miller(spec, k, 1e-14);
      MethodResult ol = olver(spec, k, 1e-14);
      if (!mi.ok() || !ol.ok()) continue;
      if (relerr(mi.value, ol.value) > 1e-12) {
        pass = false;
        g_notes.push_back("miller/olver disagreement at sample " + std::to_string(tried));
        break;
      }
      ++agree;
    }
    if (agree < 100) {
      pass = false;
      g_notes.push_back("only " + std::to_string(agree) + " miller/olver agreements");
    }
    // residual of every shift output triple against its defining relation
    auto base = [](const ParamsM& q, const EngineOptions& o) { return m_taylor_a(q, o); };
    for (int k : {8, 9, 10}) {
      MethodResult s = m_recurrence_shift({1, 2.0 + double(k), 5}, MDirection::ZeroPlus, 0, base);
      (void)s;
    }
    Cplx a{1.3, 0.2}, b{2.4, -0.1}, z{3.0, 0.5};
    for (int k = 1; k <= 10; ++k) {
      auto sh = [&](int j) {
        return m_recurrence_shift({a, b + double(j), z}, MDirection::ZeroPlus, 12 - j, base).value;
      };
      Cplx m0 = sh(k - 1), m1 = sh(k), m2 = sh(k + 1);
      Cplx bb = b + double(k);
      Cplx resid = m0 + (Cplx{1, 0} - bb - z) * m1 + z * (bb - a) * m2;
      double scale = std::max({std::abs(m0), std::abs((Cplx{1, 0} - bb - z) * m1),
                               std::abs(z * (bb - a) * m2)});
      if (std::abs(resid) > 1e-11 * scale) {
        pass = false;
        g_notes.push_back("(0+) shift residual exceeded at k=" + std::to_string(k));
      }
    }
    report(6, pass, "recurrence machinery (roots, miller/olver, shift residuals)");
  }

  // 7: quadrature moments and doubling bound
  {
    bool pass = true;
    const double grid[4] = {0.0, 0.4, -0.4, 2.5};
    for (double al : grid) {
      for (double be : grid) {
        for (int n : {2, 8, 24}) {
          QuadratureRule r = gauss_jacobi_rule(al, be, n);
          std::vector<double> m(2 * n);
          m[0] = std::exp((al + be + 1.0) * std::log(2.0) + std::lgamma(al + 1.0) +
                          std::lgamma(be + 1.0) - std::lgamma(al + be + 2.0));
          if (2 * n > 1) m[1] = (be - al) * m[0] / (al + be + 2.0);
          for (int k = 2; k < 2 * n; ++k) {
            m[k] = ((be - al) * m[k - 1] + (k - 1.0) * m[k - 2]) / (al + be + k + 1.0);
          }
          for (int k = 0; k <= 2 * n - 1; ++k) {
            double got = 0.0;
            for (int i = 0; i < r.n; ++i) got += r.weights[i] * std::pow(r.nodes[i], k);
            double scale = std::max(std::abs(m[k]), m[0]);
            if (std::abs(got - m[k]) > 1e-13 * scale) {
              pass = false;
              g_notes.push_back("moment failure at alpha=" + std::to_string(al) + " beta=" +
                                std::to_string(be) + " n=" + std::to_string(n) + " k=" +
                                std::to_string(k));
            }
          }
        }
      }
    }
    for (ParamsM p : {ParamsM{1, 3, 10}, {0.1, 0.2, 0.5}, {2.5, 7.5, -12}}) {
      int n = select_mesh_size(p.b, p.z, 1e-15);
      auto r1 = gauss_jacobi_rule((p.b - p.a).real() - 1.0, p.a.real() - 1.0, n);
      auto r2 = gauss_jacobi_rule((p.b - p.a).real() - 1.0, p.a.real() - 1.0, 2 * n);
      MethodResult v1 = m_gauss_jacobi(p, r1);
      MethodResult v2 = m_gauss_jacobi(p, r2);
      MethodResult acc = m_gauss_jacobi_auto(p);
      if (!v1.ok() || !v2.ok() || !acc.ok() ||
          relerr(v1.value, v2.value) > 10.0 * std::max(acc.est_error, 1e-16)) {
        pass = false;
        g_notes.push_back("doubling bound failed");
      }
    }
    report(7, pass, "quadrature moment exactness and doubling self-check");
  }

  // 8: term-count monotonicity
  {
    bool pass = true;
    int prev = 0;
    for (int zi = 1; zi <= 100; ++zi) {
      MethodResult r = m_taylor_a({2, 3, double(zi)});
      if (!r.ok() || r.terms < prev) {
        pass = false;
        break;
      }
      prev = r.terms;
    }
    prev = 0;
    for (int i = 0; i <= 95; ++i) {
      MethodResult r = f_taylor_a({0.15, 0.2, 1.1, double(i) / 100.0});
      if (!r.ok() || r.terms < prev) {
        pass = false;
        break;
      }
      prev = r.terms;
    }
    report(8, pass, "terms-to-converge monotone in z for both Taylor engines");
  }

  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
