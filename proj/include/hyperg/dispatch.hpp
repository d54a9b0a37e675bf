#pragma once

#include <string>
#include <vector>

#include "hyperg/types.hpp"

namespace hyperg {

struct Policy {
  double taylor_param_max = 50.0;
  double taylor_z_max_m = 50.0;
  double taylor_z_max_f = 0.9;
  double asymptotic_z_min = 100.0;
  double buchholz_lo = 10.0;
  double buchholz_hi = 100.0;
  double recurrence_trigger = 50.0;
  double quad_param_max = 40.0;
  double rho = 0.8;

  bool enable_taylor = true;
  bool enable_single_fraction = true;
  bool enable_buchholz = true;
  bool enable_asymptotic = true;
  bool enable_quadrature = true;
  bool enable_recurrence = true;
  bool enable_transforms = true;
  bool enable_buhring = true;
  bool enable_taylor_z0 = true;
  bool enable_ode = true;

  bool cross_check = true;
};

// Flat key=value text file; unknown keys are errors.
Policy load_policy_file(const std::string& path);
// Default policy, overridden by HYP_POLICY_FILE when set.
Policy policy_from_env();

struct TraceEntry {
  std::string method;
  char kind = 'M';
  ParamsF params;  // c ignored for kind == 'M'
  MethodResult result;
};

struct EvalResult {
  Cplx value{0, 0};
  std::vector<TraceEntry> trace;
  Status status = Status::NoConvergence;
  int est_digits = 0;
};

// With a cross-check value: digits of agreement; without: digits implied by
// est_error minus a one-digit safety margin. Clamped to [0, 16].
int estimate_digits(const MethodResult& primary, const MethodResult* check);

EvalResult eval_m(Cplx a, Cplx b, Cplx z, const Policy& policy = {});
EvalResult eval_f(Cplx a, Cplx b, Cplx c, Cplx z, const Policy& policy = {});

// Re-runs a single engine by trace id on the stored subproblem (trace replay).
MethodResult replay_trace_entry(const TraceEntry& entry);

}  // namespace hyperg
