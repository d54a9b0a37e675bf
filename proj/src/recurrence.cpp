#include "hyperg/recurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "hyperg/support.hpp"

namespace hyperg {

CharRoots characteristic_roots(const RecurrenceSpec& spec) {
  if (!spec.limit_a || !spec.limit_b) {
    throw std::logic_error("characteristic_roots: limits absent");
  }
  Cplx b = *spec.limit_b, a = *spec.limit_a;
  Cplx disc = std::sqrt(b * b - 4.0 * a);
  Cplx r1 = 0.5 * (-b + disc);
  Cplx r2 = 0.5 * (-b - disc);
  CharRoots out;
  if (std::abs(r1) <= std::abs(r2)) {
    out.t1 = r1;
    out.t2 = r2;
  } else {
    out.t1 = r2;
    out.t2 = r1;
  }
  out.equal_modulus = std::abs(std::abs(out.t1) - std::abs(out.t2)) < 1e-10 * std::abs(out.t2);
  return out;
}

std::vector<Cplx> forward_recur(const RecurrenceSpec& spec, Cplx y0, Cplx y1, int n) {
  std::vector<Cplx> y(std::max(n + 1, 2));
  y[0] = y0;
  y[1] = y1;
  for (int k = 1; k < n; ++k) {
    y[k + 1] = -(spec.coeff_b(k) * y[k] + spec.coeff_a(k) * y[k - 1]);
  }
  y.resize(n + 1);
  return y;
}

MethodResult miller(const RecurrenceSpec& spec, int k, double tol) {
  if (std::abs(spec.normalization) == 0.0) {
    return MethodResult::failed(Status::NotApplicable);
  }
  Cplx prev_estimate{0, 0};
  bool have_prev = false;
  for (int N = k + 20; N <= 16384; N *= 2) {
    Cplx y_up{0, 0};  // trial y_{N+1}
    Cplx y{1e-30, 0};   // trial y_N
    Cplx y_at_k{0, 0}, y_at_0{0, 0};
    bool bad = false;
    for (int n = N; n >= 1; --n) {
      if (n == k) y_at_k = y;
      Cplx a_n = spec.coeff_a(n);
      if (std::abs(a_n) < 1e-290) {
        bad = true;
        break;
      }
      Cplx y_dn = -(y_up + spec.coeff_b(n) * y) / a_n;
      y_up = y;
      y = y_dn;
      double m = std::abs(y);
      if (m > 1e250) {
        double s = 1e-250;
        y *= s;
        y_up *= s;
        y_at_k *= s;
      }
      if (!is_finite(y)) {
        bad = true;
        break;
      }
    }
    if (k == 0) y_at_k = y;
    y_at_0 = y;
    if (bad || std::abs(y_at_0) == 0.0) {
      return MethodResult::failed(Status::NoConvergence, N);
    }
    Cplx estimate = spec.normalization * (y_at_k / y_at_0);
    if (have_prev &&
        std::abs(estimate - prev_estimate) <= tol * std::max(std::abs(estimate), 1e-300)) {
      return MethodResult::converged(estimate, N, tol);
    }
    prev_estimate = estimate;
    have_prev = true;
  }
  return MethodResult::failed(Status::NoConvergence, 16384);
}

MethodResult olver(const RecurrenceSpec& spec, int k, double tol) {
  if (k < 1) {
    return MethodResult::converged(spec.normalization, 0, 0.0);
  }
  const Cplx f0 = spec.normalization;
  // p_0 = 0, p_1 = 1, p_{n+1} = -b_n p_n - a_n p_{n-1};  r_n = prod a_j.
  std::vector<Cplx> p = {Cplx{0, 0}, Cplx{1, 0}};
  std::vector<Cplx> r = {Cplx{0, 0}};  // r[0] unused
  double maxp = 1.0;
  Cplx f_target{0, 0};
  bool have_target = false;
  int N = 0;
  const int cap = 16384;
  for (N = 1; N < cap; ++N) {
    Cplx a_n = spec.coeff_a(N);
    Cplx b_n = spec.coeff_b(N);
    p.push_back(-b_n * p[N] - a_n * p[N - 1]);
    r.push_back(N == 1 ? a_n : a_n * r[N - 1]);
    if (std::abs(p[N + 1]) > 1e200 || std::abs(r[N]) > 1e200) {
      for (auto& v : p) v *= 1e-200;
      for (auto& v : r) v *= 1e-200;
      maxp *= 1e-200;
      // target-estimate pieces are ratios, unaffected by the joint rescale
    }
    maxp = std::max(maxp, std::abs(p[N]));
    if (N == k) {
      f_target = r[k] * f0 / p[k + 1];
      have_target = true;
    } else if (N > k) {
      f_target += p[k] * r[N] * f0 / (p[N] * p[N + 1]);
    }
    if (have_target && N > k + 1) {
      double bound = std::abs(r[N] * f0 / (p[N] * p[N + 1])) * maxp;
      if (bound < tol * std::max(std::abs(f_target), 1e-300)) {
        break;
      }
    }
    if (!is_finite(p[N + 1])) {
      return MethodResult::failed(Status::Overflow, N);
    }
  }
  if (N >= cap) {
    return MethodResult::failed(Status::NoConvergence, cap);
  }
  // one back-substitution pass: f_N = r_N f0 / p_{N+1}, then downwards
  std::vector<Cplx> f(N + 1);
  f[N] = r[N] * f0 / p[N + 1];
  for (int j = N - 1; j >= 1; --j) {
    f[j] = (r[j] * f0 + p[j] * f[j + 1]) / p[j + 1];
  }
  return MethodResult::converged(f[k], N, tol);
}

RecurrenceSpec m_spec_plus0(Cplx a, Cplx b, Cplx z) {
  RecurrenceSpec s;
  s.coeff_a = [a, b](int n) { return (a - b + double(n)) / (a + double(n)); };
  s.coeff_b = [a, b, z](int n) {
    return -(2.0 * a - b + z + 2.0 * double(n)) / (a + double(n));
  };
  s.limit_a = Cplx{1, 0};
  s.limit_b = Cplx{-2, 0};
  s.label = "(+0)";
  return s;
}

RecurrenceSpec m_spec_0plus(Cplx a, Cplx b, Cplx z) {
  RecurrenceSpec s;
  s.coeff_a = [a, b, z](int n) { return 1.0 / (z * (b + double(n) - a)); };
  s.coeff_b = [a, b, z](int n) {
    return (Cplx{1, 0} - b - double(n) - z) / (z * (b + double(n) - a));
  };
  s.limit_a = Cplx{0, 0};
  s.limit_b = -1.0 / z;
  s.label = "(0+)";
  return s;
}

RecurrenceSpec m_spec_plusplus(Cplx a, Cplx b, Cplx z) {
  RecurrenceSpec s;
  s.coeff_a = [a, z](int n) { return -1.0 / ((a + double(n)) * z); };
  s.coeff_b = [a, b, z](int n) {
    return (b - z - 1.0 + double(n)) / ((a + double(n)) * z);
  };
  s.limit_a = Cplx{0, 0};
  s.limit_b = 1.0 / z;
  s.label = "(++)";
  return s;
}

// ---------------------------------------------------------------------------
// Chain coefficients for 2F1 parameter ladders, via operator composition.
//
// Every contiguous 2F1(a+i,b+j;c+k) equals P(z) F + Q(z) thetaF, theta =
// z d/dz, with the ODE reducing theta^2 F to that basis. Composing the shift
// operators needs derivatives of P and Q in z, so the coefficients are
// carried as short Taylor jets about the evaluation point.
namespace {

constexpr int kJet = 6;

struct Jet {
  std::array<Cplx, kJet> c{};  // Taylor coefficients about z0
  static Jet constant(Cplx v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  static Jet variable(Cplx z0) {
    Jet j;
    j.c[0] = z0;
    j.c[1] = Cplx{1, 0};
    return j;
  }
};

Jet operator+(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJet; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}
Jet operator-(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJet; ++i) r.c[i] = x.c[i] - y.c[i];
  return r;
}
Jet operator*(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJet; ++i) {
    Cplx s{0, 0};
    for (int j = 0; j <= i; ++j) s += x.c[j] * y.c[i - j];
    r.c[i] = s;
  }
  return r;
}
Jet operator/(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJet; ++i) {
    Cplx s = x.c[i];
    for (int j = 0; j < i; ++j) s -= r.c[j] * y.c[i - j];
    r.c[i] = s / y.c[0];
  }
  return r;
}
Jet derive(const Jet& x) {
  Jet r;
  for (int i = 0; i + 1 < kJet; ++i) r.c[i] = double(i + 1) * x.c[i + 1];
  return r;
}

struct Rep {
  Jet P, Q;  // G = P F + Q thetaF
};

// thetaG in the same basis, for base function 2F1(A,B;C;z).
Rep theta_of(const Rep& g, Cplx A, Cplx B, Cplx C, const Jet& zj) {
  Jet one = Jet::constant(Cplx{1, 0});
  Jet th2_T = (zj * Jet::constant(A + B) - Jet::constant(C - Cplx{1, 0})) / (one - zj);
  Jet th2_F = zj * Jet::constant(A * B) / (one - zj);
  Rep r;
  r.P = zj * derive(g.P) + g.Q * th2_F;
  r.Q = g.P + zj * derive(g.Q) + g.Q * th2_T;
  return r;
}

enum class ShiftOp { APlus, BPlus, CMinus };

// Applies ops in sequence to F(A,B;C;z); returns the representation of the
// shifted function and the shifted parameters.
struct ShiftResult {
  Rep rep;
  Cplx A2, B2, C2;
};

ShiftResult apply_shifts(std::initializer_list<ShiftOp> ops, Cplx A, Cplx B, Cplx C,
                         const Jet& zj) {
  Rep g{Jet::constant(Cplx{1, 0}), Jet::constant(Cplx{0, 0})};
  Cplx ca = A, cb = B, cc = C;
  for (ShiftOp op : ops) {
    Rep tg = theta_of(g, A, B, C, zj);
    switch (op) {
      case ShiftOp::APlus:
        // F(ca+1,..) = ((theta + ca)/ca) G
        g.P = (tg.P + Jet::constant(ca) * g.P) / Jet::constant(ca);
        g.Q = (tg.Q + Jet::constant(ca) * g.Q) / Jet::constant(ca);
        ca += 1.0;
        break;
      case ShiftOp::BPlus:
        g.P = (tg.P + Jet::constant(cb) * g.P) / Jet::constant(cb);
        g.Q = (tg.Q + Jet::constant(cb) * g.Q) / Jet::constant(cb);
        cb += 1.0;
        break;
      case ShiftOp::CMinus:
        g.P = (tg.P + Jet::constant(cc - 1.0) * g.P) / Jet::constant(cc - 1.0);
        g.Q = (tg.Q + Jet::constant(cc - 1.0) * g.Q) / Jet::constant(cc - 1.0);
        cc -= 1.0;
        break;
    }
  }
  return {g, ca, cb, cc};
}

std::initializer_list<ShiftOp> ops_for(int da, int db, int dc) {
  static const std::initializer_list<ShiftOp> ppm = {ShiftOp::APlus, ShiftOp::BPlus,
                                                     ShiftOp::CMinus};
  static const std::initializer_list<ShiftOp> pzm = {ShiftOp::APlus, ShiftOp::CMinus};
  static const std::initializer_list<ShiftOp> pp0 = {ShiftOp::APlus, ShiftOp::BPlus};
  if (da == 1 && db == 1 && dc == -1) return ppm;
  if (da == 1 && db == 0 && dc == -1) return pzm;
  if (da == 1 && db == 1 && dc == 0) return pp0;
  throw std::logic_error("f_chain_coeffs: unsupported chain direction");
}

}  // namespace

std::pair<Cplx, Cplx> f_chain_coeffs(Cplx a, Cplx b, Cplx c, Cplx z, int da, int db, int dc,
                                     int n) {
  // relation connecting chain members n-1, n, n+1; base params at n-1
  Cplx A = a + double(da * (n - 1));
  Cplx B = b + double(db * (n - 1));
  Cplx C = c + double(dc * (n - 1));
  Jet zj = Jet::variable(z);
  auto ops = ops_for(da, db, dc);
  ShiftResult s1 = apply_shifts(ops, A, B, C, zj);
  ShiftResult s2 = apply_shifts(ops, s1.A2, s1.B2, s1.C2, zj);
  Rep t1 = theta_of(s1.rep, A, B, C, zj);
  // F2 = P2s F1 + Q2s thetaF1 expressed back in (F0, thetaF0)
  Cplx P1 = s1.rep.P.c[0], Q1 = s1.rep.Q.c[0];
  Cplx P2 = s2.rep.P.c[0] * P1 + s2.rep.Q.c[0] * t1.P.c[0];
  Cplx Q2 = s2.rep.P.c[0] * Q1 + s2.rep.Q.c[0] * t1.Q.c[0];
  Cplx b_n = -Q2 / Q1;
  Cplx a_n = -(b_n * P1 + P2);
  return {a_n, b_n};
}

// ---------------------------------------------------------------------------

MethodResult m_recurrence_shift(const ParamsM& p, MDirection dir, int steps,
                                const MBaseEval& base, const EngineOptions& opt) {
  if (steps == 0) return base(p, opt);
  switch (dir) {
    case MDirection::PlusZero: {
      Cplx a0 = p.a - double(steps);
      MethodResult r0 = base({a0, p.b, p.z}, opt);
      ParamsM p1{a0 + (steps > 0 ? 1.0 : -1.0), p.b, p.z};
      MethodResult r1 = base(p1, opt);
      if (!r0.ok() || !r1.ok()) {
        return MethodResult::failed(r0.ok() ? r1.status : r0.status);
      }
      Cplx ym = r0.value, yk = r1.value;
      int n = std::abs(steps);
      double sgn = steps > 0 ? 1.0 : -1.0;
      // relation at the middle index each step:
      //   (b-a) M(a-1) + (2a-b+z) M(a) - a M(a+1) = 0
      for (int k = 1; k < n; ++k) {
        Cplx am = a0 + sgn * double(k);
        Cplx ynext;
        if (sgn > 0) {
          if (std::abs(am) < kIntTol) return MethodResult::failed(Status::NotApplicable, k);
          ynext = ((p.b - am) * ym + (2.0 * am - p.b + p.z) * yk) / am;
        } else {
          Cplx denom = p.b - am;
          if (std::abs(denom) < kIntTol) return MethodResult::failed(Status::NotApplicable, k);
          ynext = (am * ym - (2.0 * am - p.b + p.z) * yk) / denom;
        }
        ym = yk;
        yk = ynext;
        if (!is_finite(yk)) return MethodResult::failed(Status::Overflow, k);
      }
      double est = std::max({r0.est_error, r1.est_error, kEps * double(n)});
      return MethodResult::converged(yk, n, est);
    }
    case MDirection::ZeroPlus: {
      if (steps < 1) return MethodResult::failed(Status::NotApplicable);
      Cplx btop = p.b + double(steps);
      MethodResult r1 = base({p.a, btop + 1.0, p.z}, opt);
      MethodResult r0 = base({p.a, btop, p.z}, opt);
      if (!r0.ok() || !r1.ok()) {
        return MethodResult::failed(r0.ok() ? r1.status : r0.status);
      }
      // regularized scaling: M(b-1) = (b+z-1) M(b) - z (b-a) M(b+1)
      Cplx y_up = r1.value, y = r0.value;
      for (int k = steps; k >= 1; --k) {
        Cplx bb = p.b + double(k);
        Cplx y_dn = (bb + p.z - 1.0) * y - p.z * (bb - p.a) * y_up;
        y_up = y;
        y = y_dn;
        if (!is_finite(y)) return MethodResult::failed(Status::Overflow, k);
      }
      double est = std::max({r0.est_error, r1.est_error, kEps * double(steps)});
      return MethodResult::converged(y, steps, est);
    }
    case MDirection::PlusPlus: {
      if (steps < 1) return MethodResult::failed(Status::NotApplicable);
      ParamsM p0{p.a - double(steps), p.b - double(steps), p.z};
      MethodResult r0 = base(p0, opt);
      if (!r0.ok()) return r0;
      RecurrenceSpec spec = m_spec_plusplus(p0.a, p0.b, p.z);
      spec.normalization = r0.value;
      MethodResult m = miller(spec, steps, 1e-14);
      if (!m.ok()) return m;
      m.est_error = std::max(m.est_error, r0.est_error);
      return m;
    }
  }
  return MethodResult::failed(Status::NotApplicable);
}

MethodResult f_recurrence_shift(const ParamsF& p, FRelation rel, int steps,
                                const FBaseEval& base, const EngineOptions& opt,
                                std::optional<MinimalBranch> branch) {
  if (steps == 0) return base(p, opt);
  EngineOptions raw = opt;
  raw.regularized = false;  // internal scaling is plain 2F1

  auto finish = [&](Cplx y, int n, double est) -> MethodResult {
    if (!opt.regularized) return MethodResult::converged(y, n, est);
    ExpCombine e = scale_reciprocal_gamma(p.c, y);
    if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, n);
    return MethodResult::converged(e.value, n, est);
  };

  switch (rel) {
    case FRelation::ZeroZeroPlus: {
      if (steps < 1 || p.z.real() > 0.5 + 1e-12) {
        return MethodResult::failed(Status::NotApplicable);
      }
      Cplx ctop = p.c + double(steps);
      MethodResult r1 = base({p.a, p.b, ctop + 1.0, p.z}, raw);
      MethodResult r0 = base({p.a, p.b, ctop, p.z}, raw);
      if (!r0.ok() || !r1.ok()) return MethodResult::failed(r0.ok() ? r1.status : r0.status);
      Cplx y_up = r1.value, y = r0.value;
      for (int k = steps; k >= 1; --k) {
        Cplx cc = p.c + double(k);
        // (cc)(cc-1)(z-1) y_{k-1} + cc[cc-1-(2cc-a-b-1)z] y_k + (c-a+k)(c-b+k) z y_{k+1} = 0
        Cplx y_dn = -(cc * (cc - 1.0 - (2.0 * cc - p.a - p.b - 1.0) * p.z) * y +
                      (p.c - p.a + double(k)) * (p.c - p.b + double(k)) * p.z * y_up) /
                    (cc * (cc - 1.0) * (p.z - 1.0));
        y_up = y;
        y = y_dn;
        if (!is_finite(y)) return MethodResult::failed(Status::Overflow, k);
      }
      double est = std::max({r0.est_error, r1.est_error, kEps * double(steps)});
      return finish(y, steps, est);
    }
    case FRelation::PlusPlus0: {
      if (steps < 1 || (p.z.imag() == 0.0 && p.z.real() <= 0.0)) {
        return MethodResult::failed(Status::NotApplicable);
      }
      Cplx a0 = p.a - double(steps), b0 = p.b - double(steps);
      MethodResult r0 = base({a0, b0, p.c, p.z}, raw);
      MethodResult r1 = base({a0 + 1.0, b0 + 1.0, p.c, p.z}, raw);
      if (!r0.ok() || !r1.ok()) return MethodResult::failed(r0.ok() ? r1.status : r0.status);
      Cplx ym = r0.value, yk = r1.value;
      for (int n = 1; n < steps; ++n) {
        auto [an, bn] = f_chain_coeffs(a0, b0, p.c, p.z, 1, 1, 0, n);
        Cplx ynext = -(bn * yk + an * ym);
        ym = yk;
        yk = ynext;
        if (!is_finite(yk)) return MethodResult::failed(Status::Overflow, n);
      }
      double est = std::max({r0.est_error, r1.est_error, kEps * double(steps)});
      return finish(yk, steps, est);
    }
    case FRelation::PlusPlusMinus:
    case FRelation::PlusZeroMinus: {
      if (!branch || steps < 1) return MethodResult::failed(Status::NotApplicable);
      const int da = 1, db = (rel == FRelation::PlusPlusMinus) ? 1 : 0, dc = -1;
      Cplx a0 = p.a - double(da * steps);
      Cplx b0 = p.b - double(db * steps);
      Cplx c0 = p.c - double(dc * steps);
      MethodResult r0 = base({a0, b0, c0, p.z}, raw);
      if (!r0.ok()) return r0;
      if (*branch == MinimalBranch::WantedDominant) {
        MethodResult r1 = base({a0 + double(da), b0 + double(db), c0 + double(dc), p.z}, raw);
        if (!r1.ok()) return r1;
        Cplx ym = r0.value, yk = r1.value;
        for (int n = 1; n < steps; ++n) {
          auto [an, bn] = f_chain_coeffs(a0, b0, c0, p.z, da, db, dc, n);
          Cplx ynext = -(bn * yk + an * ym);
          ym = yk;
          yk = ynext;
          if (!is_finite(yk)) return MethodResult::failed(Status::Overflow, n);
        }
        return finish(yk, steps, std::max({r0.est_error, kEps * double(steps)}));
      }
      RecurrenceSpec spec;
      spec.coeff_a = [=](int n) { return f_chain_coeffs(a0, b0, c0, p.z, da, db, dc, n).first; };
      spec.coeff_b = [=](int n) { return f_chain_coeffs(a0, b0, c0, p.z, da, db, dc, n).second; };
      spec.normalization = r0.value;
      spec.label = (rel == FRelation::PlusPlusMinus) ? "(++-)" : "(+0-)";
      MethodResult m = miller(spec, steps, 1e-14);
      if (!m.ok()) return m;
      return finish(m.value, m.terms, std::max(m.est_error, r0.est_error));
    }
  }
  return MethodResult::failed(Status::NotApplicable);
}

}  // namespace hyperg
