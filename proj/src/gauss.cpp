#include "hyperg/gauss.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hyperg/support.hpp"

namespace hyperg {

namespace {

constexpr double kHuge = 1e300;
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegenTol = 1e-6;  // b-a / c-a-b integer-degeneracy gate

MethodResult finish_2f1(Cplx sum, Cplx c, int terms, double est, bool regularized) {
  if (!regularized) {
    return MethodResult::converged(sum, terms, est);
  }
  ExpCombine e = scale_reciprocal_gamma(c, sum);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, terms);
  return MethodResult::converged(e.value, terms, est);
}

bool outside_unit_disk(Cplx z) { return std::abs(z) > 1.0 + 1e-12; }

}  // namespace

MethodResult f_taylor_direct_regularized(const ParamsF& p) {
  Cplx t{1, 0};  // (a)_j (b)_j z^j / j!
  Cplx sum{0, 0};
  double amax = 0.0;
  int small_streak = 0;
  int j = 0;
  for (; j < kSeriesCap; ++j) {
    Cplx term = t * reciprocal_gamma(p.c + Cplx(double(j), 0.0));
    sum += term;
    amax = std::max(amax, std::abs(term));
    double smag = std::abs(sum);
    if (smag > kHuge || std::abs(t) > kHuge) {
      return MethodResult::failed(Status::Overflow, j + 1);
    }
    if (smag > 0.0 && std::abs(term) < kEps * smag) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    t *= (p.a + double(j)) * (p.b + double(j)) * p.z / Cplx(double(j) + 1.0, 0.0);
    if (std::abs(t) == 0.0) {
      ++j;
      break;
    }
  }
  if (j >= kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double smag = std::abs(sum);
  double est = smag > 0.0 ? kEps * std::max(1.0, amax / smag) : kEps;
  return MethodResult::converged(sum, j + 1, est);
}

MethodResult f_taylor_a(const ParamsF& p, const EngineOptions& opt) {
  if (outside_unit_disk(p.z)) return MethodResult::failed(Status::NotApplicable);
  if (opt.regularized && near_nonpos_integer(p.c, kRegTol)) {
    return f_taylor_direct_regularized(p);
  }
  Cplx term{1, 0};
  Cplx sum{1, 0};
  double amax = 1.0;
  int small_streak = 0;
  int j = 0;
  for (; j < kSeriesCap; ++j) {
    term *= (p.a + double(j)) * (p.b + double(j)) / (p.c + double(j)) * p.z /
            Cplx(double(j) + 1.0, 0.0);
    sum += term;
    amax = std::max(amax, std::abs(term));
    if (std::abs(sum) > kHuge || std::abs(term) > kHuge) {
      return MethodResult::failed(Status::Overflow, j + 1);
    }
    if (std::abs(term) < kEps * std::abs(sum)) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    if (std::abs(term) == 0.0) break;
  }
  if (j >= kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(sum));
  return finish_2f1(sum, p.c, j + 1, est, opt.regularized);
}

MethodResult f_taylor_b(const ParamsF& p, const EngineOptions& opt) {
  if (outside_unit_disk(p.z)) return MethodResult::failed(Status::NotApplicable);
  if (std::abs(p.c) < kIntTol) return MethodResult::failed(Status::NotApplicable);
  if (opt.regularized && near_nonpos_integer(p.c, kRegTol)) {
    return f_taylor_direct_regularized(p);
  }
  Cplx s_prev2{1, 0};
  Cplx s_prev{1, 0};
  Cplx s = Cplx{1, 0} + p.a * p.b / p.c * p.z;
  double amax = std::max(1.0, std::abs(s));
  int small_streak = 0;
  int j = 2;
  for (; j <= kSeriesCap; ++j) {
    Cplx r = (p.a + double(j) - 1.0) * (p.b + double(j) - 1.0) /
             (double(j) * (p.c + double(j) - 1.0));
    s_prev2 = s_prev;
    s_prev = s;
    s = s_prev + (s_prev - s_prev2) * r * p.z;
    amax = std::max(amax, std::abs(s));
    if (std::abs(s) > kHuge) return MethodResult::failed(Status::Overflow, j);
    if (std::abs(s - s_prev) < kEps * std::abs(s)) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
  }
  if (j > kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(s));
  return finish_2f1(s, p.c, j, est, opt.regularized);
}

MethodResult f_single_fraction(const ParamsF& p, const EngineOptions& opt) {
  if (outside_unit_disk(p.z)) return MethodResult::failed(Status::NotApplicable);
  Cplx alpha{0, 0}, beta{1, 0}, gamma{1, 0};
  Cplx s{1, 0};
  double amax = 1.0;
  int small_streak = 0;
  int j = 1;
  for (; j <= kSeriesCap; ++j) {
    Cplx jc = double(j) * (p.c + double(j) - 1.0);
    alpha = (alpha + beta) * jc;
    beta = beta * (p.a + double(j) - 1.0) * (p.b + double(j) - 1.0) * p.z;
    gamma = gamma * jc;
    if (std::abs(alpha) > kHuge || std::abs(beta) > kHuge || std::abs(gamma) > kHuge) {
      return MethodResult::failed(Status::Overflow, j);
    }
    if (std::abs(gamma) == 0.0) {
      return MethodResult::failed(Status::NotApplicable, j);
    }
    Cplx s_new = (alpha + beta) / gamma;
    amax = std::max(amax, std::abs(s_new));
    if (std::abs(s_new - s) < kEps * std::abs(s_new)) {
      if (++small_streak >= 2) {
        s = s_new;
        break;
      }
    } else {
      small_streak = 0;
    }
    s = s_new;
  }
  if (j > kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(s));
  return finish_2f1(s, p.c, j, est, opt.regularized);
}

TransformPlan plan_transform(Cplx z, double rho) {
  const Cplx one{1, 0};
  std::array<Cplx, 7> w{};  // 1-indexed by case
  bool have_inv = std::abs(z) > 1e-300;
  bool have_1mz = std::abs(one - z) > 1e-300;
  w[1] = have_1mz ? one / (one - z) : Cplx{1e308, 0};
  w[2] = have_1mz ? z / (z - one) : Cplx{1e308, 0};
  w[3] = z;
  w[4] = one - z;
  w[5] = have_inv ? one - one / z : Cplx{1e308, 0};
  w[6] = have_inv ? one / z : Cplx{1e308, 0};

  double best = 1e308;
  for (int c = 1; c <= 6; ++c) best = std::min(best, std::abs(w[c]));

  TransformPlan plan;
  if (best > rho) return plan;  // near exp(+-i pi/3): every map fails

  // preference order reproduces the real-axis interval table at boundaries
  static constexpr int kOrder[6] = {3, 2, 4, 5, 6, 1};
  for (int c : kOrder) {
    if (std::abs(w[c]) <= best * (1.0 + 1e-14) + 1e-300) {
      plan.case_id = c;
      plan.w = w[c];
      plan.valid = true;
      break;
    }
  }
  switch (plan.case_id) {
    case 3: plan.formula_id = 0; break;
    case 2: plan.formula_id = 2; break;
    case 4: plan.formula_id = 3; break;
    case 5: plan.formula_id = 4; break;
    case 6: plan.formula_id = 5; break;
    case 1: plan.formula_id = 1; break;
  }
  return plan;
}

MethodResult f_apply_transform(const ParamsF& p, const TransformPlan& plan,
                               const FInnerEval& inner, const EngineOptions& opt) {
  if (!plan.valid) return MethodResult::failed(Status::NotApplicable);
  const Cplx a = p.a, b = p.b, c = p.c, z = p.z, w = plan.w;
  const Cplx one{1, 0};

  auto unregularize = [&](MethodResult r) -> MethodResult {
    if (!r.ok() || opt.regularized) return r;
    ExpCombine e = exp_scaled(log_gamma(c), r.value);
    if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, r.terms);
    r.value = e.value;
    return r;
  };

  // a two-term connection: pi/sin(pi g) * [ e^{lp1} F(p1) - e^{lp2} F(p2) ],
  // with each Gamma reciprocal dropping its term at a pole.
  auto two_term = [&](Cplx gate, Cplx lp1, bool dead1, ParamsF f1, Cplx lp2, bool dead2,
                      ParamsF f2) -> MethodResult {
    if (near_integer(gate, kDegenTol)) {
      return MethodResult::failed(Status::NotApplicable);
    }
    Cplx t1{0, 0}, t2{0, 0};
    int terms = 0;
    double est = 0.0;
    if (!dead1) {
      MethodResult r1 = inner(f1);
      if (!r1.ok()) return MethodResult::failed(r1.status, r1.terms);
      ExpCombine e1 = exp_scaled(lp1, r1.value);
      if (e1.overflow) return MethodResult::failed(Status::Overflow);
      t1 = e1.value;
      terms += r1.terms;
      est = std::max(est, r1.est_error);
    }
    if (!dead2) {
      MethodResult r2 = inner(f2);
      if (!r2.ok()) return MethodResult::failed(r2.status, r2.terms);
      ExpCombine e2 = exp_scaled(lp2, r2.value);
      if (e2.overflow) return MethodResult::failed(Status::Overflow);
      t2 = e2.value;
      terms += r2.terms;
      est = std::max(est, r2.est_error);
    }
    Cplx diff = t1 - t2;
    ExpCombine out = exp_scaled(Cplx(std::log(kPi), 0.0) - log_sin_pi(gate), diff);
    if (out.overflow || out.underflow) return MethodResult::failed(Status::Overflow, terms);
    double cancel = (std::abs(t1) + std::abs(t2)) / std::max(std::abs(diff), 1e-300);
    return MethodResult::converged(out.value, terms, std::max(est, kEps) * std::max(1.0, cancel));
  };

  switch (plan.case_id) {
    case 3: {  // identity
      return unregularize(inner(p));
    }
    case 2: {  // F = (1-z)^{-a} F(a, c-b; c; z/(z-1))
      MethodResult r = inner({a, c - b, c, w});
      if (!r.ok()) return r;
      ExpCombine e = exp_scaled(-a * std::log(one - z), r.value);
      if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, r.terms);
      return unregularize(MethodResult::converged(e.value, r.terms, std::max(r.est_error, kEps)));
    }
    case 1: {  // w = 1/(1-z)
      Cplx l1mz = std::log(one - z);
      bool dead1 = near_nonpos_integer(b) || near_nonpos_integer(c - a);
      bool dead2 = near_nonpos_integer(a) || near_nonpos_integer(c - b);
      Cplx lp1 = dead1 ? Cplx{0, 0} : -a * l1mz - log_gamma(b) - log_gamma(c - a);
      Cplx lp2 = dead2 ? Cplx{0, 0} : -b * l1mz - log_gamma(a) - log_gamma(c - b);
      return unregularize(two_term(b - a, lp1, dead1, {a, c - b, a - b + 1.0, w}, lp2, dead2,
                      {b, c - a, b - a + 1.0, w}));
    }
    case 4: {  // w = 1-z
      bool dead1 = near_nonpos_integer(c - a) || near_nonpos_integer(c - b);
      bool dead2 = near_nonpos_integer(a) || near_nonpos_integer(b);
      Cplx lp1 = dead1 ? Cplx{0, 0} : -log_gamma(c - a) - log_gamma(c - b);
      Cplx lp2 = dead2 ? Cplx{0, 0}
                       : (c - a - b) * std::log(one - z) - log_gamma(a) - log_gamma(b);
      return unregularize(two_term(c - a - b, lp1, dead1, {a, b, a + b - c + 1.0, w}, lp2, dead2,
                      {c - a, c - b, c - a - b + 1.0, w}));
    }
    case 5: {  // w = 1-1/z
      bool dead1 = near_nonpos_integer(c - a) || near_nonpos_integer(c - b);
      bool dead2 = near_nonpos_integer(a) || near_nonpos_integer(b);
      Cplx lz = std::log(z);
      Cplx lp1 = dead1 ? Cplx{0, 0} : -a * lz - log_gamma(c - a) - log_gamma(c - b);
      Cplx lp2 = dead2 ? Cplx{0, 0}
                       : (a - c) * lz + (c - a - b) * std::log(one - z) - log_gamma(a) -
                             log_gamma(b);
      return unregularize(two_term(c - a - b, lp1, dead1, {a, a - c + 1.0, a + b - c + 1.0, w}, lp2, dead2,
                      {c - a, one - a, c - a - b + 1.0, w}));
    }
    case 6: {  // w = 1/z
      bool dead1 = near_nonpos_integer(b) || near_nonpos_integer(c - a);
      bool dead2 = near_nonpos_integer(a) || near_nonpos_integer(c - b);
      Cplx lmz = std::log(-z);
      Cplx lp1 = dead1 ? Cplx{0, 0} : -a * lmz - log_gamma(b) - log_gamma(c - a);
      Cplx lp2 = dead2 ? Cplx{0, 0} : -b * lmz - log_gamma(a) - log_gamma(c - b);
      return unregularize(two_term(b - a, lp1, dead1, {a, a - c + 1.0, a - b + 1.0, w}, lp2, dead2,
                      {b - c + 1.0, b, b - a + 1.0, w}));
    }
  }
  return MethodResult::failed(Status::NotApplicable);
}

MethodResult f_buhring(const ParamsF& p, Cplx z0, const EngineOptions& opt) {
  const Cplx a = p.a, b = p.b, c = p.c, z = p.z;
  if (near_integer(b - a, kDegenTol)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  double radius = std::max(std::abs(z0), std::abs(z0 - 1.0));
  if (std::abs(z - z0) <= radius * (1.0 + 1e-12)) {
    return MethodResult::failed(Status::NotApplicable);  // inside the divergence disk
  }
  Cplx z0mz = z0 - z;
  if (std::abs(z0mz.imag()) == 0.0 && z0mz.real() < 0.0 && z.imag() == 0.0) {
    // |arg(z0 - z)| < pi fails only for real z beyond z0; the from-below
    // branch is supplied by a signed zero on z.imag() upstream
    if (!std::signbit(z.imag())) return MethodResult::failed(Status::NotApplicable);
  }

  Cplx x = 1.0 / (z - z0);
  auto series = [&](Cplx u, int& terms, double& amax_out) -> std::pair<Cplx, bool> {
    Cplx dm1{0, 0}, d0{1, 0};
    Cplx xpow{1, 0};
    Cplx sum{0, 0};
    double amax = 0.0;
    int small_streak = 0;
    int j = 0;
    for (; j < kSeriesCap; ++j) {
      Cplx dj;
      if (j == 0) {
        dj = d0;
      } else {
        dj = (double(j) + u - 1.0) / (double(j) * (double(j) + 2.0 * u - a - b)) *
             (((double(j) + u) * (1.0 - 2.0 * z0) + (a + b + 1.0) * z0 - c) * d0 +
              z0 * (1.0 - z0) * (double(j) + u - 2.0) * dm1);
        dm1 = d0;
        d0 = dj;
      }
      Cplx term = dj * xpow;
      sum += term;
      amax = std::max(amax, std::abs(term));
      xpow *= x;
      if (!is_finite(sum)) return {sum, false};
      if (j > 1 && std::abs(term) < kEps * std::abs(sum)) {
        if (++small_streak >= 2) break;
      } else {
        small_streak = 0;
      }
    }
    terms = j + 1;
    amax_out = amax;
    return {sum, j < kSeriesCap};
  };

  int n1 = 0, n2 = 0;
  double amax1 = 0.0, amax2 = 0.0;
  auto [s1, ok1] = series(a, n1, amax1);
  auto [s2, ok2] = series(b, n2, amax2);
  if (!ok1 || !ok2) return MethodResult::failed(Status::NoConvergence, n1 + n2);

  Cplx lgc = opt.regularized ? Cplx{0, 0} : log_gamma(c);
  bool dead1 = near_nonpos_integer(b) || near_nonpos_integer(c - a);
  bool dead2 = near_nonpos_integer(a) || near_nonpos_integer(c - b);
  Cplx t1{0, 0}, t2{0, 0};
  if (!dead1) {
    ExpCombine e1 = exp_scaled(log_gamma(b - a) - log_gamma(b) - log_gamma(c - a) -
                                   a * std::log(z0mz) + lgc,
                               s1);
    if (e1.overflow) return MethodResult::failed(Status::Overflow, n1 + n2);
    t1 = e1.value;
  }
  if (!dead2) {
    ExpCombine e2 = exp_scaled(log_gamma(a - b) - log_gamma(a) - log_gamma(c - b) -
                                   b * std::log(z0mz) + lgc,
                               s2);
    if (e2.overflow) return MethodResult::failed(Status::Overflow, n1 + n2);
    t2 = e2.value;
  }
  Cplx value = t1 + t2;
  double cancel = (std::abs(t1) + std::abs(t2)) / std::max(std::abs(value), 1e-300);
  double est = kEps * std::max({1.0, amax1 / std::max(std::abs(s1), 1e-300),
                                amax2 / std::max(std::abs(s2), 1e-300)}) *
               std::max(1.0, cancel);
  return MethodResult::converged(value, n1 + n2, est);
}

ExpandResult f_taylor_expand(Cplx a, Cplx b, Cplx c, Cplx z0, Cplx q0, Cplx q1, Cplx z) {
  ExpandResult out;
  const Cplx u = z - z0;
  Cplx qn = q0, qn1 = q1;
  Cplx upow = u;  // u^{n+1}
  Cplx sum = q0 + q1 * u;
  Cplx dsum = q1;
  double amax = std::max(std::abs(q0), std::abs(q1 * u));
  int small_streak = 0;
  int n = 0;
  for (; n < kSeriesCap; ++n) {
    Cplx qn2 = ((double(n) * (2.0 * z0 - 1.0) - c + (a + b + 1.0) * z0) * qn1 +
                (double(n) + a) * (double(n) + b) / (double(n) + 1.0) * qn) /
               (z0 * (1.0 - z0) * (double(n) + 2.0));
    dsum += double(n + 2) * qn2 * upow;
    upow *= u;  // u^{n+2}
    Cplx term = qn2 * upow;
    sum += term;
    amax = std::max(amax, std::abs(term));
    if (!is_finite(sum)) {
      out.value = MethodResult::failed(Status::Overflow, n);
      return out;
    }
    if (std::abs(term) < kEps * std::abs(sum)) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    qn = qn1;
    qn1 = qn2;
  }
  if (n >= kSeriesCap) {
    out.value = MethodResult::failed(Status::NoConvergence, kSeriesCap);
    return out;
  }
  double est = kEps * std::max(1.0, amax / std::max(std::abs(sum), 1e-300));
  out.value = MethodResult::converged(sum, n + 2, est);
  out.derivative = dsum;
  return out;
}

MethodResult f_taylor_about_z0(const ParamsF& p, const FBootstrap& bootstrap,
                               const EngineOptions& opt) {
  double az = std::abs(p.z);
  if (az == 0.0) return MethodResult::failed(Status::NotApplicable);
  if (std::abs(p.z.imag()) <= 1e-13 && p.z.real() >= 1.0) {
    return MethodResult::failed(Status::NotApplicable);  // on the branch cut
  }
  double r0 = (az <= 1.0) ? 0.9 : 1.1;
  Cplx z0 = r0 * p.z / az;
  if (std::abs(p.z - z0) >= std::min(std::abs(z0), std::abs(z0 - 1.0))) {
    return MethodResult::failed(Status::NotApplicable);
  }
  BootstrapValues bv = bootstrap(z0);
  if (!bv.q0.ok() || !bv.q1.ok()) {
    return MethodResult::failed(bv.q0.ok() ? bv.q1.status : bv.q0.status);
  }
  if (std::abs(p.z - z0) == 0.0) {
    return bv.q0;
  }
  ExpandResult er = f_taylor_expand(p.a, p.b, p.c, z0, bv.q0.value, bv.q1.value, p.z);
  if (!er.value.ok()) return er.value;
  MethodResult r = er.value;
  r.est_error = std::max({r.est_error, bv.q0.est_error, bv.q1.est_error});
  if (!opt.regularized) {
    ExpCombine e = exp_scaled(log_gamma(p.c), r.value);
    if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, r.terms);
    r.value = e.value;
  }
  return r;
}

MethodResult f_at_one(Cplx a, Cplx b, Cplx c, const EngineOptions& opt) {
  Cplx cab = c - a - b;
  if (!(cab.real() > 0.0)) return MethodResult::failed(Status::NotApplicable);
  if (near_nonpos_integer(c - a) || near_nonpos_integer(c - b)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  Cplx lg = log_gamma(cab) - log_gamma(c - a) - log_gamma(c - b);
  if (!opt.regularized) lg += log_gamma(c);
  ExpCombine e = exp_scaled(lg);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow);
  return MethodResult::converged(e.value, 1, kEps * 4);
}

}  // namespace hyperg
