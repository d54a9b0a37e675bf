#include "hyperg/support.hpp"

#include <array>
#include <stdexcept>

namespace hyperg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos g = 607/128, 15 coefficients (Godfrey's set, ~15 digits for
// Re(z) >= 0.5).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

constexpr std::array<double, 30> kBernoulliEven = {
    0.16666666666666667, -0.033333333333333333, 0.02380952380952381,
    -0.033333333333333333, 0.075757575757575758, -0.25311355311355311,
    1.1666666666666667, -7.092156862745098, 54.971177944862155,
    -529.12424242424242, 6192.1231884057971, -86580.253113553114,
    1425517.1666666667, -27298231.067816092, 601580873.90064237,
    -15116315767.092157, 429614643061.16667, -13711655205088.333,
    488332318973593.17, -19296579341940068.0, 8.4169304757368262e+17,
    -4.0338071854059455e+19, 2.1150748638081992e+21, -1.2086626522296526e+23,
    7.5008667460769644e+24, -5.0387781014810689e+26, 3.6528776484818123e+28,
    -2.8498769302450882e+30, 2.3865427499683628e+32, -2.1399949257225334e+34,
};

Cplx lanczos_sum(Cplx z) {
  Cplx s{kLanczos[0], 0.0};
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    s += kLanczos[k] / (z + Cplx(double(k) - 1.0, 0.0));
  }
  return s;
}

Cplx log_gamma_right(Cplx z) {
  // valid for Re(z) >= 0.5
  Cplx t = z + Cplx(kLanczosG - 0.5, 0.0);
  return (z - Cplx(0.5, 0.0)) * std::log(t) - t + kHalfLog2Pi + std::log(lanczos_sum(z));
}

}  // namespace

Cplx sin_pi(Cplx z) {
  double n = std::round(z.real());
  Cplx r = z - Cplx(n, 0.0);
  Cplx s = std::sin(kPi * r);
  return (std::fmod(std::abs(n), 2.0) < 0.5) ? s : -s;
}

Cplx log_sin_pi(Cplx z) {
  if (std::abs(z.imag()) <= 60.0) {
    return std::log(sin_pi(z));
  }
  // sin(pi z) = (e^{i pi z} - e^{-i pi z})/(2i); keep only the dominant
  // exponential plus a log1p correction.
  const Cplx ipi{0.0, kPi};
  if (z.imag() > 0.0) {
    // e^{-i pi z} dominates
    return -ipi * z - std::log(Cplx(0.0, 2.0)) + std::log(Cplx(1, 0) - std::exp(2.0 * ipi * z)) + Cplx(0.0, kPi);
  }
  return ipi * z - std::log(Cplx(0.0, 2.0)) + std::log(Cplx(1, 0) - std::exp(-2.0 * ipi * z));
}

Cplx log_gamma(Cplx z) {
  if (near_nonpos_integer(z)) {
    throw std::domain_error("log_gamma: pole at non-positive integer");
  }
  if (z.real() >= 0.5) {
    return log_gamma_right(z);
  }
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
  return Cplx(kLogPi, 0.0) - log_sin_pi(z) - log_gamma_right(Cplx(1, 0) - z);
}

Cplx reciprocal_gamma(Cplx z) {
  // Exact non-positive integers give an exact zero through the range-reduced
  // sin; values nearby (even 1e-15 away) get their true small reciprocal,
  // which the regularized series need.
  if (z == Cplx{std::round(z.real()), 0.0} && z.real() < 0.5) {
    return Cplx{0.0, 0.0};
  }
  if (z.real() >= 0.5) {
    return std::exp(-log_gamma_right(z));
  }
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, assembled in log space so that
  // very negative Re(z) underflows cleanly instead of tripping on
  // Gamma(1-z) overflow.
  Cplx w = log_sin_pi(z) + log_gamma_right(Cplx(1, 0) - z) - Cplx(kLogPi, 0.0);
  if (w.real() > 700.0) {
    return Cplx{std::numeric_limits<double>::infinity(), 0.0};
  }
  return std::exp(w);
}

std::optional<Cplx> rising_factorial_log(Cplx mu, int j) {
  Cplx acc{0.0, 0.0};
  for (int k = 0; k < j; ++k) {
    Cplx f = mu + Cplx(double(k), 0.0);
    if (std::abs(f) < kIntTol) {
      return std::nullopt;
    }
    acc += std::log(f);
  }
  return acc;
}

std::span<const double> bernoulli_even() {
  return {kBernoulliEven.data(), kBernoulliEven.size()};
}

ExpCombine scale_reciprocal_gamma(Cplx g, Cplx sum) {
  if (near_nonpos_integer(g, 1e-13)) {
    // rgamma is tiny here; a plain product cannot overflow
    Cplx v = reciprocal_gamma(g) * sum;
    return {v, false, std::abs(v) == 0.0 && std::abs(sum) != 0.0};
  }
  return exp_scaled(-log_gamma(g), sum);
}

ExpCombine exp_scaled(Cplx log_pref, Cplx factor) {
  if (std::abs(factor) == 0.0) {
    return {Cplx{0, 0}, false};
  }
  // exp(log_pref)*factor is preferred: folding log(factor) into the exponent
  // costs |Re log_pref| * eps of relative accuracy.
  if (std::abs(log_pref.real()) < 700.0) {
    Cplx v = std::exp(log_pref) * factor;
    if (!is_finite(v)) return {Cplx{0, 0}, true, false};
    if (std::abs(v) == 0.0) return {Cplx{0, 0}, false, true};
    return {v, false, false};
  }
  Cplx total = log_pref + std::log(factor);
  if (total.real() > 709.0) {
    return {Cplx{0, 0}, true, false};
  }
  if (total.real() < -745.0) {
    return {Cplx{0, 0}, false, true};
  }
  return {std::exp(total), false, false};
}

namespace {

// Taylor branch: J_nu(z) = (z/2)^nu sum_k (-z^2/4)^k / (k! Gamma(nu+k+1)),
// as log-prefactor plus a sum. Returns {mantissa, log_scale}.
struct LogVal {
  Cplx mantissa{0, 0};
  double log_scale = 0.0;
  Status status = Status::Converged;
  int terms = 0;
  double cancel = 1.0;  // max term magnitude over final sum magnitude
};

LogVal bessel_taylor_log(Cplx nu, Cplx z) {
  // J_nu(z) = (z/2)^nu / Gamma(nu+1) * sum_k t_k,  t_0 = 1,
  // t_{k+1} = t_k * (-z^2/4) / ((k+1)(nu+k+1)); prefactor kept in log form.
  LogVal out;
  if (std::abs(z) == 0.0) {
    out.mantissa = (std::abs(nu) < kIntTol) ? Cplx{1, 0} : Cplx{0, 0};
    return out;
  }
  if (near_nonpos_integer(nu + Cplx(1, 0))) {
    // exact Gamma pole; integer reflection happens in the caller
    out.status = Status::NotApplicable;
    return out;
  }
  Cplx logpref = nu * std::log(0.5 * z) - log_gamma(nu + Cplx(1, 0));
  Cplx q = -0.25 * z * z;
  Cplx term{1, 0};
  Cplx sum{1, 0};
  double amax = 1.0;
  int k = 0;
  for (; k < 2000; ++k) {
    Cplx d = nu + Cplx(double(k) + 1.0, 0.0);
    if (std::abs(d) < 1e-280) {
      out.status = Status::NoConvergence;
      return out;
    }
    term *= q / (Cplx(double(k) + 1.0, 0.0) * d);
    sum += term;
    amax = std::max(amax, std::abs(term));
    if (std::abs(term) < kEps * std::abs(sum) && k > 2) {
      break;
    }
  }
  out.terms = k + 1;
  if (k >= 2000) {
    out.status = Status::NoConvergence;
    return out;
  }
  double smag = std::abs(sum);
  if (smag == 0.0) {
    out.mantissa = Cplx{0, 0};
    out.log_scale = logpref.real();
    return out;
  }
  out.cancel = amax / smag;
  out.log_scale = logpref.real() + std::log(smag);
  out.mantissa = std::exp(Cplx(0.0, logpref.imag())) * (sum / smag);
  return out;
}

MethodResult bessel_hankel(Cplx nu, Cplx z) {
  // |z| large, |nu| small: J = sqrt(2/(pi z)) [cos w P - sin w Q],
  // w = z - nu pi/2 - pi/4, asymptotic P/Q truncated at the smallest term.
  // The phase is assembled with a compensated low-order part; otherwise the
  // pi-multiple roundings cost (|z|+|nu|)*eps of phase accuracy.
  constexpr double kPiO2Hi = 1.5707963267948966;       // pi/2 rounded
  constexpr double kPiO2Lo = 6.123233995736766e-17;    // residual
  Cplx mu = 4.0 * nu * nu;
  Cplx p_hi = kPiO2Hi * nu;
  Cplx p_err{std::fma(kPiO2Hi, nu.real(), -p_hi.real()),
             std::fma(kPiO2Hi, nu.imag(), -p_hi.imag())};
  Cplx w = z - p_hi - Cplx(0.5 * kPiO2Hi, 0.0);
  Cplx delta = -p_err - kPiO2Lo * nu - Cplx(0.5 * kPiO2Lo, 0.0) +
               ((z - w) - p_hi - Cplx(0.5 * kPiO2Hi, 0.0));  // subtraction residual
  Cplx term{1, 0};
  Cplx p{1, 0}, qsum{0, 0};
  double last = 1.0;
  int m = 1;
  double min_term = 1.0;
  for (; m < 60; ++m) {
    double odd = 2.0 * double(m) - 1.0;
    term *= (mu - Cplx(odd * odd, 0.0)) / (Cplx(0, 0) + 8.0 * z * double(m));
    double tm = std::abs(term);
    if (tm > last && m > 2) {
      break;  // divergence point of the asymptotic series
    }
    if (m % 2 == 1) {
      qsum += (m % 4 == 1) ? term : -term;
    } else {
      p += (m % 4 == 2) ? -term : term;
    }
    last = tm;
    min_term = std::min(min_term, tm);
    if (tm < 1e-18) break;
  }
  if (min_term > 1e-11) {
    return MethodResult::failed(Status::NoConvergence, m);
  }
  Cplx cw = std::cos(w) - delta * std::sin(w);
  Cplx sw = std::sin(w) + delta * std::cos(w);
  Cplx val = std::sqrt(2.0 / (kPi * z)) * (cw * p - sw * qsum);
  if (!is_finite(val)) {
    return MethodResult::failed(Status::Overflow, m);
  }
  return MethodResult::converged(val, m, std::max(min_term, kEps));
}

}  // namespace

ScaledSeq bessel_j_ladder(Cplx nu0, int count, Cplx z, const BesselOptions& opt) {
  constexpr double kL = 575.6462732485114210;  // log(1e250)
  ScaledSeq seq;
  seq.mantissa.resize(count);
  seq.log_scale.resize(count);
  // Miller-style trial pass: arbitrary start high above the needed orders
  // (the J-direction is minimal upward, so the downward trial converges to
  // it), then normalize against one accurately computed anchor value.
  double target = std::max(opt.taylor_order_factor * std::abs(z), nu0.real() + double(count) + 2.0);
  int m_extra = std::max(0, int(std::ceil(target - nu0.real())) - count + 1);
  int top = count + m_extra + 14;  // orders nu0 .. nu0+top

  std::vector<Cplx> trial(count);
  std::vector<int> trial_n(count, 0);
  Cplx y_up{0, 0};
  Cplx y{1e-250, 0};
  int n_rescale = 0;
  Cplx trial_top{0, 0};
  int trial_top_n = 0;
  int top_record = top - 14;  // order used for the fallback anchor
  for (int k = top; k >= 0; --k) {
    if (k == top_record) {
      trial_top = y;
      trial_top_n = n_rescale;
    }
    if (k < count) {
      trial[k] = y;
      trial_n[k] = n_rescale;
    }
    Cplx nu = nu0 + Cplx(double(k), 0.0);
    Cplx y_dn = (2.0 * nu / z) * y - y_up;
    y_up = y;
    y = y_dn;
    if (std::abs(y) > 1e250) {
      y *= 1e-250;
      y_up *= 1e-250;
      ++n_rescale;
    }
    if (!is_finite(y)) {
      seq.status = Status::Overflow;
      return seq;
    }
  }

  // anchor: prefer a cancellation-free Taylor sum at the largest stored
  // trial entry (stays clear of Bessel zeros), then Hankel at the base
  // order, then the high-order Taylor value (log-assembled, slightly worse).
  int jbest = 0;
  double best_eff = -1e308;
  for (int j = 0; j < count; ++j) {
    double m = std::abs(trial[j]);
    if (m == 0.0) continue;
    double eff = std::log(m) + double(trial_n[j]) * kL;
    if (eff > best_eff) {
      best_eff = eff;
      jbest = j;
    }
  }
  LogVal anchor;
  bool have = false;
  Cplx trial_ref;
  int trial_ref_n = 0;
  {
    LogVal tb = bessel_taylor_log(nu0 + Cplx(double(jbest), 0.0), z);
    if (tb.status == Status::Converged && tb.cancel <= 3e3 && std::abs(tb.mantissa) > 0.0) {
      anchor = tb;
      trial_ref = trial[jbest];
      trial_ref_n = trial_n[jbest];
      have = true;
    }
  }
  if (!have && std::abs(z) >= opt.hankel_z_min &&
      std::norm(nu0) <= opt.hankel_order_max_sq * std::abs(z) && std::abs(trial[0]) > 0.0 &&
      std::log(std::abs(trial[0])) + double(trial_n[0]) * kL >= best_eff - 2.3) {
    MethodResult h = bessel_hankel(nu0, z);
    if (h.ok() && std::abs(h.value) > 0.0) {
      anchor.mantissa = h.value;
      anchor.log_scale = 0.0;
      trial_ref = trial[0];
      trial_ref_n = trial_n[0];
      have = true;
    }
  }
  if (!have) {
    LogVal thi = bessel_taylor_log(nu0 + Cplx(double(top_record), 0.0), z);
    if (thi.status != Status::Converged || std::abs(thi.mantissa) == 0.0) {
      seq.status = Status::NoConvergence;
      return seq;
    }
    anchor = thi;
    trial_ref = trial_top;
    trial_ref_n = trial_top_n;
  }
  if (std::abs(trial_ref) == 0.0 || std::abs(anchor.mantissa) == 0.0) {
    seq.status = Status::NoConvergence;
    return seq;
  }
  // out_j = trial_j * anchor / trial_ref, magnitudes combined in log space
  double ref_mag = std::abs(trial_ref);
  Cplx ref_phase = trial_ref / ref_mag;
  double ref_eff = std::log(ref_mag) + double(trial_ref_n) * kL;
  double anch_mag = std::abs(anchor.mantissa);
  Cplx anch_phase = anchor.mantissa / anch_mag;
  double anch_log = anchor.log_scale + std::log(anch_mag);
  for (int j = 0; j < count; ++j) {
    double tm = std::abs(trial[j]);
    if (tm == 0.0) {
      seq.mantissa[j] = Cplx{0, 0};
      seq.log_scale[j] = -1e308;
      continue;
    }
    seq.mantissa[j] = (trial[j] / tm) * anch_phase * std::conj(ref_phase);
    seq.log_scale[j] = anch_log + std::log(tm) + double(trial_n[j]) * kL - ref_eff;
  }
  return seq;
}

MethodResult bessel_j(Cplx nu, Cplx z, const BesselOptions& opt) {
  double az = std::abs(z);
  double anu = std::abs(nu);
  if (az == 0.0) {
    return MethodResult::converged(std::abs(nu) < kIntTol ? Cplx{1, 0} : Cplx{0, 0}, 1, 0.0);
  }
  // negative integer order: J_{-m} = (-1)^m J_m
  if (nu.real() < -0.5 && near_integer(nu, 1e-12) && std::abs(nu.imag()) < 1e-12) {
    int m = int(std::llround(-nu.real()));
    MethodResult r = bessel_j(-nu, z, opt);
    if (m % 2 == 1) r.value = -r.value;
    return r;
  }
  if (az <= opt.taylor_z_max || anu >= opt.taylor_order_factor * az) {
    LogVal lv = bessel_taylor_log(nu, z);
    if (lv.status != Status::Converged) return MethodResult::failed(lv.status, lv.terms);
    ExpCombine e = exp_scaled(Cplx(lv.log_scale, 0.0), lv.mantissa);
    if (e.overflow) return MethodResult::failed(Status::Overflow, lv.terms);
    return MethodResult::converged(e.value, lv.terms, kEps * 10);
  }
  if (az >= opt.hankel_z_min && anu * anu <= opt.hankel_order_max_sq * az) {
    MethodResult r = bessel_hankel(nu, z);
    if (r.ok()) return r;
  }
  // transition zone: one ladder pass ending at the requested order
  ScaledSeq seq = bessel_j_ladder(nu, 1, z, opt);
  if (seq.status != Status::Converged) return MethodResult::failed(seq.status);
  ExpCombine e = exp_scaled(Cplx(seq.log_scale[0], 0.0), seq.mantissa[0]);
  if (e.overflow) return MethodResult::failed(Status::Overflow);
  return MethodResult::converged(e.value, 0, kEps * 100);
}

}  // namespace hyperg
