#include "hyperg/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hyperg/confluent.hpp"
#include "hyperg/gauss.hpp"
#include "hyperg/ode.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/recurrence.hpp"
#include "hyperg/support.hpp"

namespace hyperg {

namespace {

bool near_neg_int(Cplx v, double tol, double degree_cap) {
  return near_integer(v, tol) && v.real() < 0.5 && -v.real() <= degree_cap;
}

// ---------------------------------------------------------------------------
// Deterministic building blocks. Each is a pure function of (id, params,
// options), which is what makes trace replay exact.

MethodResult m_term_chain(const ParamsM& p, const EngineOptions& opt) {
  // terminating series, evaluated by the a-direction recursion from the
  // exact head of the chain (stable where direct summation cancels)
  if (!near_neg_int(p.a, 1e-12, 1500)) return MethodResult::failed(Status::NotApplicable);
  int k = int(std::llround(-p.a.real()));
  auto base = [](const ParamsM& q, const EngineOptions& o) { return m_taylor_a(q, o); };
  ParamsM target{Cplx(-double(k), 0.0), p.b, p.z};
  MethodResult r = m_recurrence_shift(target, MDirection::PlusZero, -k, base, opt);
  if (r.ok()) r.est_error = std::max(r.est_error, kEps * std::sqrt(double(k) + 1.0) * 4.0);
  return r;
}

MethodResult m_kummer(const ParamsM& p, const EngineOptions& opt, bool terminating) {
  // M(a;b;z) = e^z M(b-a;b;-z), both sides regularized or not
  ParamsM q{p.b - p.a, p.b, -p.z};
  MethodResult inner = terminating ? m_term_chain(q, opt) : m_taylor_a(q, opt);
  if (!inner.ok()) return inner;
  ExpCombine e = exp_scaled(p.z, inner.value);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, inner.terms);
  inner.value = e.value;
  return inner;
}

// first converged of the plain series/quadrature chain; used as the base for
// parameter-shift routes
MethodResult m_base_chain(const ParamsM& p, const EngineOptions& opt) {
  MethodResult r = m_taylor_a(p, opt);
  if (r.ok() && r.est_error < 1e-10) return r;
  MethodResult r2 = m_single_fraction(p, opt);
  if (r2.ok() && r2.est_error < 1e-10) return r2;
  MethodResult r3 = m_gauss_jacobi_auto(p, opt);
  if (r3.ok() && r3.est_error < 1e-10) return r3;
  MethodResult r4 = m_asymptotic(p, AsymVariant::TermRecursion, opt);
  if (r4.ok() && r4.est_error < 1e-10) return r4;
  for (const MethodResult* c : {&r, &r2, &r3, &r4}) {
    if (c->ok()) return *c;
  }
  return r;
}

MethodResult m_shift_a_up(const ParamsM& p, const EngineOptions& opt) {
  int steps = int(std::floor(p.a.real())) - 1;
  if (steps < 1) return MethodResult::failed(Status::NotApplicable);
  auto base = [](const ParamsM& q, const EngineOptions& o) { return m_base_chain(q, o); };
  MethodResult r = m_recurrence_shift(p, MDirection::PlusZero, steps, base, opt);
  if (r.ok()) r.est_error = std::max(r.est_error, kEps * std::sqrt(double(steps)) * 8.0);
  return r;
}

MethodResult m_shift_b_up(const ParamsM& p, const EngineOptions& opt) {
  if (p.b.real() >= 0.5 || near_nonpos_integer(p.b, kRegTol)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  int steps = int(std::ceil(-p.b.real())) + 2;
  auto base = [](const ParamsM& q, const EngineOptions& o) { return m_base_chain(q, o); };
  MethodResult r = m_recurrence_shift(p, MDirection::ZeroPlus, steps, base, opt);
  if (r.ok()) r.est_error = std::max(r.est_error, kEps * std::sqrt(double(steps)) * 8.0);
  return r;
}

MethodResult run_m_route(const std::string& id, const ParamsM& p, const EngineOptions& opt) {
  if (id == "m-taylor-a") return m_taylor_a(p, opt);
  if (id == "m-taylor-b") return m_taylor_b(p, opt);
  if (id == "m-single-fraction") return m_single_fraction(p, opt);
  if (id == "m-buchholz") return m_buchholz(p, opt);
  if (id == "m-asymptotic-a") return m_asymptotic(p, AsymVariant::TermRecursion, opt);
  if (id == "m-asymptotic-b") return m_asymptotic(p, AsymVariant::IterativeSum, opt);
  if (id == "m-gauss-jacobi") return m_gauss_jacobi_auto(p, opt);
  if (id == "m-ode") return m_ode(p, default_path_m(p.z), opt);
  if (id == "m-term-chain") return m_term_chain(p, opt);
  if (id == "m-kummer-term") return m_kummer(p, opt, true);
  if (id == "m-kummer-taylor") return m_kummer(p, opt, false);
  if (id == "m-shift-a-up") return m_shift_a_up(p, opt);
  if (id == "m-shift-b-up") return m_shift_b_up(p, opt);
  return MethodResult::failed(Status::NotApplicable);
}

// --------------------------- Gauss side -----------------------------------

// deterministic series chain used inside transforms and bootstraps
MethodResult f_series_chain(const ParamsF& p, const EngineOptions& opt) {
  MethodResult best = MethodResult::failed(Status::NotApplicable);
  MethodResult r = f_taylor_a(p, opt);
  if (r.ok() && r.est_error < 1e-11) return r;
  if (r.ok()) best = r;
  MethodResult rb = f_taylor_b(p, opt);
  if (rb.ok() && rb.est_error < 1e-11) return rb;
  if (rb.ok() && (!best.ok() || rb.est_error < best.est_error)) best = rb;
  MethodResult rs = f_single_fraction(p, opt);
  if (rs.ok() && (!best.ok() || rs.est_error < best.est_error)) best = rs;
  if (best.ok()) return best;
  return r.status != Status::NotApplicable ? r : rb;
}

MethodResult f_gj_route(const ParamsF& p, const EngineOptions& opt) {
  if (p.c.real() > p.b.real() && p.b.real() > 0.0) {
    return f_gauss_jacobi_auto(p, opt);
  }
  if (p.c.real() > p.a.real() && p.a.real() > 0.0) {
    return f_gauss_jacobi_auto({p.b, p.a, p.c, p.z}, opt);  // a and b interchanged
  }
  return MethodResult::failed(Status::NotApplicable);
}

MethodResult f_transform_route(const ParamsF& p, double rho, const EngineOptions& opt) {
  TransformPlan plan = plan_transform(p.z, rho);
  if (!plan.valid) return MethodResult::failed(Status::NotApplicable);
  EngineOptions reg;  // inner evaluations are regularized F
  auto inner = [&](const ParamsF& q) { return f_series_chain(q, reg); };
  return f_apply_transform(p, plan, inner, opt);
}

MethodResult f_taylor_z0_route(const ParamsF& p, const EngineOptions& opt) {
  EngineOptions reg;
  // bootstrap by marching along the ray: direct series at the 0.8 point
  // (safely inside the disk), then expansion hops to the requested z0
  auto bootstrap = [&](Cplx z0) -> BootstrapValues {
    BootstrapValues bv;
    bv.q0 = MethodResult::failed(Status::NoConvergence);
    bv.q1 = bv.q0;
    double r_target = std::abs(z0);
    Cplx ray = z0 / r_target;
    Cplx w = 0.8 * ray;
    MethodResult q0w = f_series_chain({p.a, p.b, p.c, w}, reg);
    MethodResult q1w = f_series_chain({p.a + 1.0, p.b + 1.0, p.c + 1.0, w}, reg);
    if (!q0w.ok() || !q1w.ok()) return bv;
    Cplx val = q0w.value;
    Cplx der = p.a * p.b * q1w.value;
    double est = std::max(q0w.est_error, q1w.est_error);
    for (double r : {0.95, 1.1}) {
      double hop_to = std::min(r, r_target);
      if (hop_to <= std::abs(w) + 1e-12) break;
      ExpandResult hop = f_taylor_expand(p.a, p.b, p.c, w, val, der, hop_to * ray);
      if (!hop.value.ok()) return bv;
      val = hop.value.value;
      der = hop.derivative;
      est = std::max(est, hop.value.est_error);
      w = hop_to * ray;
    }
    bv.q0 = MethodResult::converged(val, 0, est);
    bv.q1 = MethodResult::converged(der, 0, est);
    return bv;
  };
  return f_taylor_about_z0(p, bootstrap, opt);
}

MethodResult f_euler_cshift(const ParamsF& p, const EngineOptions& opt) {
  // Euler transform, then enlarge c until the series at (c-a, c-b, c+N) is
  // benign, then recurse back down in c (stable toward Re z <= 1/2)
  if (p.z.real() > 0.5 + 1e-12 || std::abs(p.z) > 0.95) {
    return MethodResult::failed(Status::NotApplicable);
  }
  Cplx a2 = p.c - p.a, b2 = p.c - p.b;
  double big = std::max(std::abs(a2), std::abs(b2));
  if (big > 4000.0) return MethodResult::failed(Status::NotApplicable);
  int steps = std::max(0, int(std::ceil(1.3 * big + 10.0 - p.c.real())));
  auto base = [](const ParamsF& q, const EngineOptions& o) { return f_taylor_a(q, o); };
  ParamsF inner{a2, b2, p.c, p.z};
  EngineOptions raw = opt;
  raw.regularized = false;
  MethodResult r = f_recurrence_shift(inner, FRelation::ZeroZeroPlus, steps, base, raw);
  if (!r.ok()) return r;
  Cplx lg = (p.c - p.a - p.b) * std::log(Cplx(1, 0) - p.z);
  if (opt.regularized) lg -= log_gamma(p.c);
  ExpCombine e = exp_scaled(lg, r.value);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, r.terms);
  r.value = e.value;
  r.est_error = std::max(r.est_error, kEps * std::sqrt(double(steps) + 1.0) * 8.0);
  return r;
}

MethodResult f_euler_series(const ParamsF& p, const EngineOptions& opt) {
  // plain Euler transform, series at (c-a, c-b)
  MethodResult inner = f_series_chain({p.c - p.a, p.c - p.b, p.c, p.z}, EngineOptions{});
  if (!inner.ok()) return inner;
  Cplx lg = (p.c - p.a - p.b) * std::log(Cplx(1, 0) - p.z);
  if (!opt.regularized) lg += log_gamma(p.c);
  ExpCombine e = exp_scaled(lg, inner.value);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, inner.terms);
  inner.value = e.value;
  return inner;
}

MethodResult f_pfaff_series(const ParamsF& p, const EngineOptions& opt) {
  // Pfaff map toward w = z/(z-1); useful for real z < 0
  Cplx w = p.z / (p.z - 1.0);
  MethodResult inner = f_series_chain({p.a, p.c - p.b, p.c, w}, EngineOptions{});
  if (!inner.ok()) return inner;
  Cplx lg = -p.a * std::log(Cplx(1, 0) - p.z);
  if (!opt.regularized) lg += log_gamma(p.c);
  ExpCombine e = exp_scaled(lg, inner.value);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, inner.terms);
  inner.value = e.value;
  return inner;
}

MethodResult f_shift_ab_up(const ParamsF& p, const EngineOptions& opt) {
  double big = std::max(std::abs(p.a.real()), std::abs(p.b.real()));
  int steps = int(std::floor(big)) - 1;
  if (steps < 1 || (p.z.imag() == 0.0 && p.z.real() <= 0.0)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  if (p.a.real() < 0.0 || p.b.real() < 0.0) return MethodResult::failed(Status::NotApplicable);
  steps = std::min(steps, int(std::floor(std::min(p.a.real(), p.b.real()))) - 1);
  if (steps < 1) return MethodResult::failed(Status::NotApplicable);
  auto base = [](const ParamsF& q, const EngineOptions& o) { return f_series_chain(q, o); };
  MethodResult r = f_recurrence_shift(p, FRelation::PlusPlus0, steps, base, opt);
  if (r.ok()) r.est_error = std::max(r.est_error, kEps * std::sqrt(double(steps)) * 8.0);
  return r;
}

MethodResult run_f_route(const std::string& id, const ParamsF& p, const EngineOptions& opt) {
  if (id == "f-taylor-a") return f_taylor_a(p, opt);
  if (id == "f-taylor-b") return f_taylor_b(p, opt);
  if (id == "f-single-fraction") return f_single_fraction(p, opt);
  if (id == "f-gauss-jacobi") return f_gj_route(p, opt);
  if (id == "f-buhring") return f_buhring(p, Cplx{0.5, 0.0}, opt);
  if (id == "f-taylor-z0") return f_taylor_z0_route(p, opt);
  if (id == "f-at-one") return f_at_one(p.a, p.b, p.c, opt);
  if (id == "f-euler-series") return f_euler_series(p, opt);
  if (id == "f-pfaff-series") return f_pfaff_series(p, opt);
  if (id == "f-euler-cshift") return f_euler_cshift(p, opt);
  if (id == "f-shift-ab-up") return f_shift_ab_up(p, opt);
  if (id == "f-ode") return f_ode(p, default_path_f(p.z), opt);
  if (id.rfind("f-transform@", 0) == 0) {
    return f_transform_route(p, std::stod(id.substr(12)), opt);
  }
  return MethodResult::failed(Status::NotApplicable);
}

// ---------------------------------------------------------------------------

struct Selector {
  std::vector<TraceEntry>* trace;
  double best_est = std::numeric_limits<double>::infinity();
  int n_ok = 0;

  void consider(TraceEntry entry) {
    for (const auto& e : *trace) {
      if (e.method == entry.method) return;  // each route runs once
    }
    trace->push_back(std::move(entry));
    const MethodResult& r = trace->back().result;
    if (!r.ok()) return;
    ++n_ok;
    best_est = std::min(best_est, r.est_error);
  }
  bool done() const { return n_ok >= 2 && best_est <= 3e-14; }
  bool any() const { return n_ok > 0; }
};

EvalResult finalize(std::vector<TraceEntry>&& trace, bool cross_check) {
  EvalResult out;
  out.trace = std::move(trace);
  // pointers into the vector are invalidated by the move; re-scan
  const MethodResult* best = nullptr;
  const MethodResult* second = nullptr;
  for (const auto& e : out.trace) {
    if (!e.result.ok()) continue;
    if (!best || e.result.est_error < best->est_error) {
      second = best;
      best = &e.result;
    } else if (!second || e.result.est_error < second->est_error) {
      second = &e.result;
    }
  }
  if (!best) {
    out.status = Status::NoConvergence;
    out.est_digits = 0;
    return out;
  }
  out.value = best->value;
  out.status = Status::Converged;
  // a checker only counts if its own error bar could expose a disagreement
  const MethodResult* check =
      (cross_check && second && second->est_error <= 1e-9) ? second : nullptr;
  out.est_digits = estimate_digits(*best, check);
  return out;
}

}  // namespace

int estimate_digits(const MethodResult& primary, const MethodResult* check) {
  if (!primary.ok()) return 0;
  double d;
  if (check && check->ok()) {
    double denom = std::max(std::abs(primary.value), 1e-300);
    double rel = std::abs(primary.value - check->value) / denom;
    if (rel == 0.0) return 16;
    d = std::floor(-std::log10(rel));
  } else {
    double err = std::max(primary.est_error, 1e-17);
    d = std::floor(-std::log10(err)) - 1.0;
  }
  return int(std::clamp(d, 0.0, 16.0));
}

EvalResult eval_m(Cplx a, Cplx b, Cplx z, const Policy& pol) {
  std::vector<TraceEntry> trace;
  Selector sel{&trace};
  ParamsM p{a, b, z};
  EngineOptions opt;

  auto attempt = [&](const char* id) {
    if (sel.done()) return;
    MethodResult r = run_m_route(id, p, opt);
    sel.consider({id, 'M', {a, b, Cplx{0, 0}, z}, r});
  };

  if (std::abs(z) == 0.0) {
    MethodResult triv = MethodResult::converged(reciprocal_gamma(b), 1, kEps);
    sel.consider({"m-trivial-z0", 'M', {a, b, Cplx{0, 0}, z}, triv});
    return finalize(std::move(trace), false);
  }

  const double az = std::abs(z), aa = std::abs(a), ab = std::abs(b);
  const bool realcase = is_real(a) && is_real(b) && is_real(z);
  const bool a_term = near_neg_int(a, 1e-12, 1500);
  const bool ba_term = near_neg_int(b - a, 1e-12, 1500);
  const bool sign_opposite =
      (a.real() >= 0.0 ? 1 : -1) != (z.real() >= 0.0 ? 1 : -1);
  const bool buchholz_ok = pol.enable_buchholz && sign_opposite &&
                           aa >= pol.buchholz_lo && aa <= pol.buchholz_hi &&
                           az >= pol.buchholz_lo && az <= pol.buchholz_hi;

  if (realcase) {
    // Table-2 style real strategy
    if (pol.enable_recurrence && a_term && z.real() > 0.0) attempt("m-term-chain");
    if (pol.enable_recurrence && ba_term && z.real() < 0.0) attempt("m-kummer-term");
    if (pol.enable_taylor && z.real() < 0.0 && a.real() >= 0.0 && (b - a).real() >= 0.0 &&
        !ba_term) {
      attempt("m-kummer-taylor");  // cancellation-free sign flip
    }
    if (buchholz_ok) attempt("m-buchholz");
    if (pol.enable_taylor && aa <= pol.taylor_param_max && az <= pol.taylor_z_max_m) {
      attempt("m-taylor-a");
      attempt("m-taylor-b");
    }
    if (pol.enable_single_fraction && ab <= 1.0 && az <= pol.taylor_z_max_m) {
      attempt("m-single-fraction");
    }
    if (pol.enable_asymptotic && az >= pol.asymptotic_z_min) {
      attempt("m-asymptotic-a");
      attempt("m-asymptotic-b");
    }
    if (pol.enable_quadrature && b.real() > a.real() && a.real() > 0.0 &&
        aa <= pol.quad_param_max && ab <= pol.quad_param_max) {
      attempt("m-gauss-jacobi");
    }
    if (pol.enable_recurrence && b.real() < 0.0 && !near_nonpos_integer(b, kRegTol)) {
      attempt("m-shift-b-up");
    }
    if (pol.enable_recurrence && a.real() >= pol.recurrence_trigger && !sel.any()) {
      attempt("m-shift-a-up");
    }
    if (pol.enable_taylor && !sel.any()) {
      attempt("m-taylor-a");  // honest fallback outside the guided regions
      attempt("m-taylor-b");
      attempt("m-single-fraction");
    }
    if (pol.enable_asymptotic && !sel.any() && az >= 30.0) attempt("m-asymptotic-a");
    if (pol.enable_ode && !sel.any() && az <= 60.0) attempt("m-ode");
    return finalize(std::move(trace), pol.cross_check);
  }

  // complex roadmap
  if (pol.enable_recurrence && a_term && z.real() >= 0.0 && a.real() < -0.5) {
    attempt("m-term-chain");
  }
  if (pol.enable_taylor && aa <= pol.taylor_param_max && az <= pol.taylor_z_max_m) {
    attempt("m-taylor-a");
    attempt("m-taylor-b");
  }
  if (pol.enable_single_fraction && ab <= 1.0 && az <= pol.taylor_z_max_m) {
    attempt("m-single-fraction");
  }
  if (buchholz_ok) attempt("m-buchholz");
  if (pol.enable_asymptotic && az >= pol.asymptotic_z_min) {
    attempt("m-asymptotic-a");
    attempt("m-asymptotic-b");
  }
  if (pol.enable_quadrature && b.real() > a.real() && a.real() > 0.0 &&
      aa <= pol.quad_param_max && ab <= pol.quad_param_max) {
    attempt("m-gauss-jacobi");
  }
  if (pol.enable_recurrence && ba_term && z.real() < 0.0 && !sel.any()) attempt("m-kummer-term");
  if (pol.enable_recurrence && std::abs(b.real()) >= pol.recurrence_trigger && b.real() < 0.0 &&
      !near_nonpos_integer(b, kRegTol) && !sel.any()) {
    attempt("m-shift-b-up");
  }
  if (pol.enable_recurrence && a.real() >= pol.recurrence_trigger && !sel.any()) {
    attempt("m-shift-a-up");
  }
  if (pol.enable_taylor && !sel.any()) {
    attempt("m-taylor-a");
    attempt("m-taylor-b");
    attempt("m-single-fraction");
  }
  if (pol.enable_ode && !sel.any() && az <= 60.0 && !near_nonpos_integer(b, kRegTol)) {
    attempt("m-ode");
  }
  return finalize(std::move(trace), pol.cross_check);
}

EvalResult eval_f(Cplx a, Cplx b, Cplx c, Cplx z, const Policy& pol) {
  std::vector<TraceEntry> trace;
  Selector sel{&trace};
  if (is_real(z) && z.real() >= 1.0 && z.imag() == 0.0) {
    z = Cplx(z.real(), -0.0);  // continuity from below on the cut
  }
  ParamsF p{a, b, c, z};
  EngineOptions opt;

  auto attempt = [&](const std::string& id) {
    if (sel.done()) return;
    MethodResult r = run_f_route(id, p, opt);
    sel.consider({id, 'F', p, r});
  };

  if (std::abs(z) == 0.0) {
    MethodResult triv = MethodResult::converged(reciprocal_gamma(c), 1, kEps);
    sel.consider({"f-trivial-z0", 'F', p, triv});
    return finalize(std::move(trace), false);
  }
  if (std::abs(z - Cplx(1, 0)) < 1e-13) {
    attempt("f-at-one");
    return finalize(std::move(trace), false);
  }

  const double az = std::abs(z);
  const double pmax = std::max({std::abs(a), std::abs(b), std::abs(c)});
  const bool realcase = is_real(a) && is_real(b) && is_real(c) && is_real(z);
  const bool large_params = pmax >= pol.recurrence_trigger;
  std::string transform_id = "f-transform@" + std::to_string(pol.rho);

  if (az <= pol.taylor_z_max_f) {
    if (realcase) {
      const bool negative_ab = a.real() < 0.0 || b.real() < 0.0;
      if (negative_ab && (c - a).real() >= 0.0 && (c - b).real() >= 0.0 && pol.enable_transforms) {
        if (large_params && pol.enable_recurrence) attempt("f-euler-cshift");
        if (!large_params) attempt("f-euler-series");
      }
      if (z.real() < 0.0 && (c - b).real() >= 0.0 && pol.enable_transforms && !large_params) {
        attempt("f-pfaff-series");
      }
    }
    if (pol.enable_taylor && pmax <= 4.0 * pol.recurrence_trigger) {
      attempt("f-taylor-a");
      attempt("f-taylor-b");
    }
    if (pol.enable_single_fraction && (std::abs(c) <= 1.0 || near_integer(c, 1e-3)) &&
        pmax <= pol.recurrence_trigger) {
      attempt("f-single-fraction");
    }
    if (pol.enable_quadrature && pmax <= 2.0 * pol.quad_param_max) attempt("f-gauss-jacobi");
    if (pol.enable_recurrence && large_params && !sel.done()) {
      attempt("f-euler-cshift");
      if (!sel.any()) attempt("f-shift-ab-up");
    }
    if (pol.enable_taylor && !sel.any()) {
      attempt("f-taylor-a");
      attempt("f-taylor-b");
      attempt("f-single-fraction");
    }
    if (pol.enable_ode && !sel.any() && !near_nonpos_integer(c, kRegTol)) attempt("f-ode");
    return finalize(std::move(trace), pol.cross_check);
  }

  // outside the series disk: transform, continue, or integrate
  TransformPlan plan = pol.enable_transforms ? plan_transform(z, pol.rho) : TransformPlan{};
  bool plan_degenerate = false;
  if (plan.valid) {
    if (plan.case_id == 1 || plan.case_id == 6) {
      plan_degenerate = near_integer(b - a, 1e-6);
    } else if (plan.case_id == 4 || plan.case_id == 5) {
      plan_degenerate = near_integer(c - a - b, 1e-6);
    }
  }
  if (plan.valid && !plan_degenerate) {
    attempt(transform_id);
  }
  if (pol.enable_taylor_z0 && (plan_degenerate || !plan.valid) && !sel.done()) {
    if (pol.enable_buhring && !near_integer(b - a, 1e-6)) attempt("f-buhring");
    attempt("f-taylor-z0");
  }
  if (pol.enable_buhring && !sel.done()) attempt("f-buhring");
  if (pol.enable_quadrature && pmax <= 2.0 * pol.quad_param_max && !sel.done()) {
    attempt("f-gauss-jacobi");
  }
  if (pol.enable_taylor_z0 && !sel.any()) attempt("f-taylor-z0");
  if (pol.enable_taylor && az <= 1.0 + 1e-12 && !sel.any()) {
    attempt("f-taylor-a");  // |z| = 1 boundary: honest attempt
  }
  if (pol.enable_ode && !sel.any() && az <= 20.0 && !near_nonpos_integer(c, kRegTol)) {
    attempt("f-ode");
  }
  return finalize(std::move(trace), pol.cross_check);
}

MethodResult replay_trace_entry(const TraceEntry& entry) {
  EngineOptions opt;
  if (entry.kind == 'M') {
    return run_m_route(entry.method, {entry.params.a, entry.params.b, entry.params.z}, opt);
  }
  return run_f_route(entry.method, entry.params, opt);
}

Policy load_policy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("policy file not readable: " + path);
  Policy pol;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = line.find_first_not_of(" \t\r\n");
    if (notspace == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("policy file line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t\r\n"));
      s.erase(s.find_last_not_of(" \t\r\n") + 1);
    };
    trim(key);
    trim(val);
    auto setd = [&](const char* k, double& field) {
      if (key == k) {
        field = std::stod(val);
        return true;
      }
      return false;
    };
    auto setb = [&](const char* k, bool& field) {
      if (key == k) {
        field = (val == "1" || val == "true" || val == "on");
        return true;
      }
      return false;
    };
    bool known = setd("taylor_param_max", pol.taylor_param_max) ||
                 setd("taylor_z_max_m", pol.taylor_z_max_m) ||
                 setd("taylor_z_max_f", pol.taylor_z_max_f) ||
                 setd("asymptotic_z_min", pol.asymptotic_z_min) ||
                 setd("buchholz_lo", pol.buchholz_lo) || setd("buchholz_hi", pol.buchholz_hi) ||
                 setd("recurrence_trigger", pol.recurrence_trigger) ||
                 setd("quad_param_max", pol.quad_param_max) || setd("rho", pol.rho) ||
                 setb("enable_taylor", pol.enable_taylor) ||
                 setb("enable_single_fraction", pol.enable_single_fraction) ||
                 setb("enable_buchholz", pol.enable_buchholz) ||
                 setb("enable_asymptotic", pol.enable_asymptotic) ||
                 setb("enable_quadrature", pol.enable_quadrature) ||
                 setb("enable_recurrence", pol.enable_recurrence) ||
                 setb("enable_transforms", pol.enable_transforms) ||
                 setb("enable_buhring", pol.enable_buhring) ||
                 setb("enable_taylor_z0", pol.enable_taylor_z0) ||
                 setb("enable_ode", pol.enable_ode) || setb("cross_check", pol.cross_check);
    if (!known) {
      throw std::runtime_error("policy file line " + std::to_string(lineno) + ": unknown key '" +
                               key + "'");
    }
  }
  return pol;
}

Policy policy_from_env() {
  const char* path = std::getenv("HYP_POLICY_FILE");
  if (path && *path) return load_policy_file(path);
  return Policy{};
}

}  // namespace hyperg
