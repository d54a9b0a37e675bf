#include "hyperg/confluent.hpp"

#include <algorithm>
#include <vector>

namespace hyperg {

namespace {

constexpr double kHuge = 1e300;

// Applies the regularization scale (1/Gamma(b) or nothing) to a computed
// 1F1 partial sum, in log space so extreme Gamma(b) cannot overflow.
MethodResult finish_1f1(Cplx sum, Cplx b, int terms, double est, bool regularized) {
  if (!regularized) {
    return MethodResult::converged(sum, terms, est);
  }
  ExpCombine e = scale_reciprocal_gamma(b, sum);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, terms);
  return MethodResult::converged(e.value, terms, est);
}

// Unregularized-output helper for engines whose natural output is the
// regularized function.
MethodResult finish_regularized(Cplx log_extra, Cplx sum, Cplx b, int terms, double est,
                                bool regularized) {
  Cplx lg = regularized ? log_extra : log_extra + log_gamma(b);
  ExpCombine e = exp_scaled(lg, sum);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, terms);
  return MethodResult::converged(e.value, terms, est);
}

}  // namespace

MethodResult m_taylor_direct_regularized(const ParamsM& p) {
  // sum_j (a)_j rgamma(b+j) z^j / j!; leading terms vanish automatically at
  // the Gamma poles.
  Cplx t{1, 0};  // (a)_j z^j / j!
  Cplx sum{0, 0};
  double amax = 0.0;
  int small_streak = 0;
  int j = 0;
  for (; j < kSeriesCap; ++j) {
    Cplx term = t * reciprocal_gamma(p.b + Cplx(double(j), 0.0));
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
    t *= (p.a + Cplx(double(j), 0.0)) * p.z / Cplx(double(j) + 1.0, 0.0);
    if (std::abs(t) == 0.0) {  // terminating a
      ++j;
      break;
    }
  }
  if (j >= kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double smag = std::abs(sum);
  double est = smag > 0.0 ? kEps * std::max(1.0, amax / smag) : kEps;
  return MethodResult::converged(sum, j + 1, est);
}

MethodResult m_taylor_a(const ParamsM& p, const EngineOptions& opt) {
  if (opt.regularized && near_nonpos_integer(p.b, kRegTol)) {
    return m_taylor_direct_regularized(p);
  }
  Cplx term{1, 0};
  Cplx sum{1, 0};
  double amax = 1.0;
  int small_streak = 0;
  int j = 0;
  for (; j < kSeriesCap; ++j) {
    term *= (p.a + Cplx(double(j), 0.0)) / (p.b + Cplx(double(j), 0.0)) * p.z /
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
    if (std::abs(term) == 0.0) break;  // terminating series
  }
  if (j >= kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(sum));
  return finish_1f1(sum, p.b, j + 1, est, opt.regularized);
}

MethodResult m_taylor_b(const ParamsM& p, const EngineOptions& opt) {
  if (std::abs(p.b) < kIntTol) {
    return MethodResult::failed(Status::NotApplicable);
  }
  if (opt.regularized && near_nonpos_integer(p.b, kIntTol)) {
    return MethodResult::failed(Status::NotApplicable);  // 1F1 recursion hits the pole
  }
  Cplx s_prev2{1, 0};
  Cplx s_prev{1, 0};
  Cplx s = Cplx{1, 0} + p.a / p.b * p.z;
  double amax = std::max(1.0, std::abs(s));
  int small_streak = 0;
  int j = 2;
  for (; j <= kSeriesCap; ++j) {
    Cplx r = (p.a + Cplx(double(j) - 1.0, 0.0)) /
             (Cplx(double(j), 0.0) * (p.b + Cplx(double(j) - 1.0, 0.0)));
    s_prev2 = s_prev;
    s_prev = s;
    s = s_prev + (s_prev - s_prev2) * r * p.z;
    amax = std::max(amax, std::abs(s));
    if (std::abs(s) > kHuge) {
      return MethodResult::failed(Status::Overflow, j);
    }
    if (std::abs(s - s_prev) < kEps * std::abs(s)) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
  }
  if (j > kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(s));
  return finish_1f1(s, p.b, j, est, opt.regularized);
}

MethodResult m_single_fraction(const ParamsM& p, const EngineOptions& opt) {
  Cplx alpha{0, 0}, beta{1, 0}, gamma{1, 0};
  Cplx s{1, 0};
  double amax = 1.0;
  int small_streak = 0;
  int j = 1;
  for (; j <= kSeriesCap; ++j) {
    Cplx jb = Cplx(double(j), 0.0) * (p.b + Cplx(double(j) - 1.0, 0.0));
    alpha = (alpha + beta) * jb;
    beta = beta * (p.a + Cplx(double(j) - 1.0, 0.0)) * p.z;
    gamma = gamma * jb;
    // S_j is invariant under a joint rescale of the three accumulators
    double big = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
    if (big > 1e250) {
      alpha *= 1e-250;
      beta *= 1e-250;
      gamma *= 1e-250;
    } else if (big > 0.0 && big < 1e-250) {
      alpha *= 1e250;
      beta *= 1e250;
      gamma *= 1e250;
    }
    if (!is_finite(alpha) || !is_finite(beta) || !is_finite(gamma)) {
      return MethodResult::failed(Status::Overflow, j);
    }
    if (std::abs(gamma) == 0.0) {
      return MethodResult::failed(Status::NotApplicable, j);  // b an exact non-positive integer
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
  return finish_1f1(s, p.b, j, est, opt.regularized);
}

MethodResult m_buchholz(const ParamsM& p, const EngineOptions& opt) {
  const Cplx a = p.a, b = p.b, z = p.z;
  if (std::abs(b - 2.0 * a) < kRegTol) {
    // M(a;2a;z) = Gamma(a+1/2) e^{z/2} (iz/4)^{-(a-1/2)} J_{a-1/2}(iz/2) / Gamma(2a)
    Cplx iz = Cplx(0, 1) * z;
    MethodResult bj = bessel_j(a - Cplx(0.5, 0.0), 0.5 * iz);
    if (!bj.ok()) return MethodResult::failed(bj.status, bj.terms);
    if (std::abs(bj.value) == 0.0) return MethodResult::failed(Status::Overflow, bj.terms);
    Cplx logpref = log_gamma(a + Cplx(0.5, 0.0)) + 0.5 * z -
                   (a - Cplx(0.5, 0.0)) * std::log(0.25 * iz) - log_gamma(2.0 * a);
    return finish_regularized(logpref + std::log(bj.value), Cplx{1, 0}, b, bj.terms,
                              kEps * 100, opt.regularized);
  }
  Cplx w2 = z * (2.0 * b - 4.0 * a);
  if (std::abs(w2) < 1e-280) {
    return MethodResult::failed(Status::NotApplicable);
  }
  Cplx w = std::sqrt(w2);
  ScaledSeq lad = bessel_j_ladder(b - Cplx(1, 0), kSeriesCap + 1, w);
  if (lad.status != Status::Converged) {
    return MethodResult::failed(lad.status);
  }
  constexpr double kL = 575.6462732485114210;  // log(1e250)
  // common log-prefactor; the 1F1 variant folds in Gamma(b)
  Cplx logpref = 0.5 * z + (b - Cplx(1, 0)) * (Cplx(0.6931471805599453, 0.0) - std::log(w));
  if (!opt.regularized) logpref += log_gamma(b);

  // (z/w)^j as a running product with power-of-1e250 scale tracking, so the
  // dominant terms avoid per-term log assembly
  const Cplx zw = z / w;
  Cplx pmant{1, 0};
  int pn = 0;

  std::vector<Cplx> d = {Cplx{1, 0}, Cplx{0, 0}, 0.5 * b};
  d.reserve(kSeriesCap + 2);
  Cplx sum{0, 0};
  double amax = 0.0;
  int small_streak = 0;
  int j = 0;
  for (; j <= kSeriesCap; ++j) {
    if (j >= 3) {
      d.push_back(((Cplx(double(j) - 2.0, 0.0) + b) * d[j - 2] + (2.0 * a - b) * d[j - 3]) /
                  Cplx(double(j), 0.0));
    }
    Cplx dj = d[std::min<std::size_t>(j, d.size() - 1)];
    if (std::abs(dj) > kHuge) return MethodResult::failed(Status::Overflow, j);
    Cplx term{0, 0};
    if (std::abs(dj) > 0.0 && std::abs(lad.mantissa[j]) > 0.0) {
      double scale_log = lad.log_scale[j] + double(pn) * kL;
      ExpCombine e = exp_scaled(logpref + Cplx(scale_log, 0.0), dj * pmant * lad.mantissa[j]);
      if (e.overflow) return MethodResult::failed(Status::Overflow, j);
      term = e.value;  // underflowed terms contribute zero
    }
    sum += term;
    amax = std::max(amax, std::abs(term));
    if (!is_finite(sum)) return MethodResult::failed(Status::Overflow, j);
    if (j > 3 && std::abs(term) < kEps * std::abs(sum)) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    pmant *= zw;
    double pm = std::abs(pmant);
    if (pm > 1e250) {
      pmant *= 1e-250;
      ++pn;
    } else if (pm < 1e-250 && pm > 0.0) {
      pmant *= 1e250;
      --pn;
    }
  }
  if (j > kSeriesCap) return MethodResult::failed(Status::NoConvergence, kSeriesCap);
  double est = kEps * std::max(1.0, amax / std::abs(sum)) * 100.0;
  return MethodResult::converged(sum, j + 1, est);
}

MethodResult m_asymptotic(const ParamsM& p, AsymVariant variant, const EngineOptions& opt) {
  const Cplx a = p.a, b = p.b, z = p.z;
  // an exact non-positive integer zeroes the reciprocal-Gamma prefactor of
  // one branch; that branch is dropped (its series often diverges) and the
  // other frequently terminates
  const bool drop1 = near_nonpos_integer(a, 1e-12);
  const bool drop2 = near_nonpos_integer(b - a, 1e-12);
  if (drop1 && drop2) {
    return MethodResult::failed(Status::NotApplicable);
  }
  const bool real_positive_z = is_real(z) && z.real() > 0.0;
  const double sign = (std::arg(z) >= -1.5707963267948966) ? 1.0 : -1.0;

  // one 2F0-type sum; must pass below tol before its terms grow. Returns the
  // sum, a truncation estimate (inf if never small), and the cancellation.
  struct SeriesOut {
    Cplx sum{0, 0};
    double tail = 0.0;
    double cancel = 1.0;
    int terms = 0;
  };
  auto sum_2f0 = [&](Cplx u, Cplx v, Cplx x) -> SeriesOut {
    SeriesOut out;
    Cplx term{1, 0};
    KahanSum acc;       // method (a): compensated term accumulation
    acc.add(term);
    Cplx s{1, 0};       // method (b): literal previous-two iteration
    Cplx s_prev{0, 0};
    double amax = 1.0;
    int j = 0;
    bool converged = false;
    for (; j < kSeriesCap; ++j) {
      Cplx ratio = (u + Cplx(double(j), 0.0)) * (v + Cplx(double(j), 0.0)) /
                   (Cplx(double(j) + 1.0, 0.0) * x);
      Cplx next = (variant == AsymVariant::TermRecursion) ? term * ratio
                                                          : (s - s_prev) * ratio;
      double smag = std::max(
          std::abs(variant == AsymVariant::TermRecursion ? acc.value() : s), 1e-300);
      if (std::abs(next) < kEps * smag) {
        converged = true;
        out.tail = std::abs(next) / smag;
        ++j;
        break;
      }
      if (std::abs(next) > std::abs(term) && j > 0) {
        break;  // divergence point of the asymptotic series
      }
      term = next;
      acc.add(term);
      Cplx snew = s + next;
      s_prev = s;
      s = snew;
      amax = std::max(amax, std::abs(term));
      if (std::abs(term) == 0.0) {
        converged = true;
        ++j;
        break;
      }
    }
    out.sum = (variant == AsymVariant::TermRecursion) ? acc.value() : s;
    out.terms = j;
    out.cancel = amax / std::max(std::abs(out.sum), 1e-300);
    out.tail = converged ? out.tail : std::numeric_limits<double>::infinity();
    return out;
  };

  SeriesOut s1, s2;
  if (!drop1) s1 = sum_2f0(b - a, Cplx(1, 0) - a, z);
  if (!drop2) s2 = sum_2f0(a, Cplx(1, 0) + a - b, -z);
  if ((!drop1 && !std::isfinite(s1.tail)) || (!drop2 && !std::isfinite(s2.tail))) {
    return MethodResult::failed(Status::NoConvergence, s1.terms + s2.terms);
  }
  Cplx lgb = opt.regularized ? Cplx{0, 0} : log_gamma(b);
  ExpCombine p1{Cplx{0, 0}, false, false};
  if (!drop1) {
    // e^z carries an exact argument; folding it into the assembled exponent
    // would cost |Re z|*eps of relative accuracy
    Cplx rest1 = (a - b) * std::log(z) - log_gamma(a) + lgb;
    if (std::abs(z.real()) < 708.0 && std::abs(rest1.real()) < 700.0) {
      Cplx v = std::exp(z) * std::exp(rest1) * s1.sum;
      if (is_finite(v)) {
        p1 = {v, false, false};
      } else {
        p1 = exp_scaled(z + rest1, s1.sum);
      }
    } else {
      p1 = exp_scaled(z + rest1, s1.sum);
    }
  }
  ExpCombine p2{Cplx{0, 0}, false, false};
  if (!drop2) {
    Cplx lp2 = -a * std::log(z) - log_gamma(b - a) + lgb;
    if (real_positive_z) {
      // on the positive real axis the two branch choices average to
      // cos(pi a); the residual branch ambiguity is exponentially small
      ExpCombine base = exp_scaled(lp2, s2.sum);
      p2 = base;
      p2.value = std::cos(3.14159265358979323846 * a.real()) * base.value;
    } else {
      p2 = exp_scaled(lp2 + Cplx(0.0, sign * 3.14159265358979323846) * a, s2.sum);
    }
  }
  if (p1.overflow || p2.overflow) {
    return MethodResult::failed(Status::Overflow, s1.terms + s2.terms);
  }
  if ((p1.underflow || drop1) && (p2.underflow || drop2)) {
    return MethodResult::failed(Status::Overflow, s1.terms + s2.terms);
  }
  Cplx value = p1.value + p2.value;
  double scale = std::max(std::abs(value), 1e-300);
  double m1 = std::abs(p1.value), m2 = std::abs(p2.value);
  double est = kEps * (m1 + m2) / scale + (m1 * (s1.tail + kEps * s1.cancel) +
                                           m2 * (s2.tail + kEps * s2.cancel)) /
                                              scale +
               kEps;
  return MethodResult::converged(value, s1.terms + s2.terms, est);
}

}  // namespace hyperg
