#include "hyperg/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hyperg/support.hpp"

namespace hyperg {

namespace {

using State = std::array<Cplx, 2>;  // (f, f')

// Dormand-Prince 5(4) pair.
struct DPStep {
  State y5;
  double err;  // mixed norm of the embedded difference
};

template <typename RHS>
DPStep dp_step(const RHS& rhs, Cplx t, Cplx h, const State& y, double rtol, double atol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto axpy = [&](double s, const State& k, State acc) {
    acc[0] += s * h * k[0];
    acc[1] += s * h * k[1];
    return acc;
  };
  State k1 = rhs(t, y);
  State k2 = rhs(t + c2 * h, axpy(a21, k1, y));
  State y3 = axpy(a32, k2, axpy(a31, k1, y));
  State k3 = rhs(t + c3 * h, y3);
  State y4 = axpy(a43, k3, axpy(a42, k2, axpy(a41, k1, y)));
  State k4 = rhs(t + c4 * h, y4);
  State y5s = axpy(a54, k4, axpy(a53, k3, axpy(a52, k2, axpy(a51, k1, y))));
  State k5 = rhs(t + c5 * h, y5s);
  State y6 = axpy(a65, k5, axpy(a64, k4, axpy(a63, k3, axpy(a62, k2, axpy(a61, k1, y)))));
  State k6 = rhs(t + h, y6);
  State ynew = axpy(b6, k6, axpy(b5, k5, axpy(b4, k4, axpy(b3, k3, axpy(b1, k1, y)))));
  State k7 = rhs(t + h, ynew);

  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    Cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  return {ynew, err};
}

template <typename RHS>
Status integrate_segment(const RHS& rhs, Cplx from, Cplx to, State& y, double rtol, double atol) {
  Cplx dir = to - from;
  double len = std::abs(dir);
  if (len == 0.0) return Status::Converged;
  dir /= len;
  double s = 0.0;
  double h = len / 50.0;
  int rejects_in_row = 0;
  for (int it = 0; it < 1000000; ++it) {
    if (s >= len) return Status::Converged;
    h = std::min(h, len - s);
    if (h < 1e-14 * len) return Status::NoConvergence;  // step-size underflow
    Cplx t = from + s * dir;
    DPStep st = dp_step(rhs, t, h * dir, y, rtol, atol);
    if (!std::isfinite(st.err)) return Status::Overflow;
    if (st.err <= 1.0) {
      y = st.y5;
      s += h;
      h *= std::clamp(0.9 * std::pow(std::max(st.err, 1e-10), -0.2), 1.0, 5.0);
      rejects_in_row = 0;
    } else {
      h *= std::clamp(0.9 * std::pow(st.err, -0.2), 0.1, 0.9);
      if (++rejects_in_row > 60) return Status::NoConvergence;
    }
  }
  return Status::NoConvergence;
}

bool path_ok_f(Cplx from, const std::vector<Cplx>& pts) {
  Cplx prev = from;
  for (Cplx q : pts) {
    // distance from the segment [prev, q] to 1
    Cplx d = q - prev;
    double len2 = std::norm(d);
    double u = len2 > 0 ? std::clamp((((Cplx(1, 0) - prev) * std::conj(d)).real()) / len2, 0.0, 1.0)
                        : 0.0;
    if (std::abs(prev + u * d - Cplx(1, 0)) < 0.05 - 1e-12) return false;
    if (std::abs(q) < 1e-8 && std::abs(q - pts.back()) > 0) return false;
    prev = q;
  }
  return true;
}

}  // namespace

IntegrationPath default_path_m(Cplx z, double rel_tol, double abs_tol) {
  IntegrationPath p;
  p.rel_tol = rel_tol;
  p.abs_tol = abs_tol;
  p.waypoints = {z};
  return p;
}

IntegrationPath default_path_f(Cplx z, double rel_tol, double abs_tol) {
  IntegrationPath p;
  p.rel_tol = rel_tol;
  p.abs_tol = abs_tol;
  // detour when the straight run from near 0 to z approaches the branch point
  Cplx d = z;
  double len2 = std::norm(d);
  double u = len2 > 0 ? std::clamp((Cplx(1, 0) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
  if (std::abs(u * d - Cplx(1, 0)) < 0.05) {
    double side = (z.imag() > 0.0) ? 0.5 : -0.5;  // continuity from below on the cut
    if (z.imag() == 0.0) side = -0.5;
    p.waypoints = {Cplx(0.5, side), Cplx(z.real() > 1.0 ? 1.5 : z.real(), side), z};
  } else {
    p.waypoints = {z};
  }
  return p;
}

MethodResult m_ode(const ParamsM& p, const IntegrationPath& path, const EngineOptions& opt) {
  if (near_nonpos_integer(p.b, kRegTol)) return MethodResult::failed(Status::NotApplicable);
  if (std::abs(p.z) < 1e-12) {
    return MethodResult::converged(opt.regularized ? reciprocal_gamma(p.b) : Cplx{1, 0}, 1, kEps);
  }
  Cplx z0 = 1e-3 * p.z / std::abs(p.z);
  // 10-term Taylor bootstrap for (f, f') at z0
  State y{Cplx{0, 0}, Cplx{0, 0}};
  Cplx term{1, 0};
  for (int j = 0; j < 10; ++j) {
    y[0] += term;
    if (j > 0) y[1] += double(j) * term / z0;
    term *= (p.a + double(j)) / (p.b + double(j)) * z0 / double(j + 1);
  }
  auto rhs = [&](Cplx t, const State& s) -> State {
    return {s[1], -((p.b - t) * s[1] - p.a * s[0]) / t};
  };
  Cplx from = z0;
  for (Cplx q : path.waypoints) {
    Status st = integrate_segment(rhs, from, q, y, path.rel_tol, path.abs_tol);
    if (st != Status::Converged) return MethodResult::failed(st);
    from = q;
  }
  if (!opt.regularized) {
    return MethodResult::converged(y[0], 0, path.rel_tol * 10);
  }
  ExpCombine e = scale_reciprocal_gamma(p.b, y[0]);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow);
  return MethodResult::converged(e.value, 0, path.rel_tol * 10);
}

MethodResult f_ode(const ParamsF& p, const IntegrationPath& path, const EngineOptions& opt) {
  if (near_nonpos_integer(p.c, kRegTol)) return MethodResult::failed(Status::NotApplicable);
  if (std::abs(p.z) < 1e-12) {
    return MethodResult::converged(opt.regularized ? reciprocal_gamma(p.c) : Cplx{1, 0}, 1, kEps);
  }
  Cplx z0 = 1e-3 * p.z / std::abs(p.z);
  if (!path_ok_f(z0, path.waypoints)) return MethodResult::failed(Status::NotApplicable);
  State y{Cplx{0, 0}, Cplx{0, 0}};
  Cplx term{1, 0};
  for (int j = 0; j < 10; ++j) {
    y[0] += term;
    if (j > 0) y[1] += double(j) * term / z0;
    term *= (p.a + double(j)) * (p.b + double(j)) / (p.c + double(j)) * z0 / double(j + 1);
  }
  auto rhs = [&](Cplx t, const State& s) -> State {
    return {s[1], (p.a * p.b * s[0] - (p.c - (p.a + p.b + 1.0) * t) * s[1]) / (t * (1.0 - t))};
  };
  Cplx from = z0;
  for (Cplx q : path.waypoints) {
    Status st = integrate_segment(rhs, from, q, y, path.rel_tol, path.abs_tol);
    if (st != Status::Converged) return MethodResult::failed(st);
    from = q;
  }
  if (!opt.regularized) {
    return MethodResult::converged(y[0], 0, path.rel_tol * 10);
  }
  ExpCombine e = scale_reciprocal_gamma(p.c, y[0]);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow);
  return MethodResult::converged(e.value, 0, path.rel_tol * 10);
}

}  // namespace hyperg
