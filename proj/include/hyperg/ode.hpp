#pragma once

#include <vector>

#include "hyperg/confluent.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

struct IntegrationPath {
  Cplx start{0, 0};             // filled in by the engines (Taylor bootstrap point)
  std::vector<Cplx> waypoints;  // straight segments; last entry is the target z
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
};

// Straight line to z, detouring by +/-0.5i when the segment passes within
// 0.05 of the branch point at 1 (side chosen for continuity from below).
IntegrationPath default_path_m(Cplx z, double rel_tol = 1e-11, double abs_tol = 1e-14);
IntegrationPath default_path_f(Cplx z, double rel_tol = 1e-11, double abs_tol = 1e-14);

// Integrates f'' from the confluent equation as (f, f') with a 10-term
// Taylor start at 1e-3 * z/|z|; returns the regularized M.
MethodResult m_ode(const ParamsM& p, const IntegrationPath& path, const EngineOptions& opt = {});

// Gauss equation analogue. Path segments must stay 0.05 away from z = 1 and
// clear of the origin at interior points.
MethodResult f_ode(const ParamsF& p, const IntegrationPath& path, const EngineOptions& opt = {});

}  // namespace hyperg
