#include "hyperg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hyperg/support.hpp"

namespace hyperg {

namespace {

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix,
// accumulating the rotations into the first-row vector q (IMTQLX lineage).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& q) {
  const int n = int(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        if (std::abs(e[m]) <= kEps * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
      }
      if (m == l) break;
      if (++iter > 30) throw std::runtime_error("gauss_jacobi_rule: QL iteration limit");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double bb = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
        f = q[i + 1];
        q[i + 1] = s * q[i] + c * f;
        q[i] = c * q[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  // sort ascending, carrying q
  for (int i = 1; i < n; ++i) {
    double dk = d[i], qk = q[i];
    int j = i - 1;
    for (; j >= 0 && d[j] > dk; --j) {
      d[j + 1] = d[j];
      q[j + 1] = q[j];
    }
    d[j + 1] = dk;
    q[j + 1] = qk;
  }
}

double newton_t_logt(double s) {
  // inverse of s = t log t on t >= 1
  if (s <= 0.0) return 1.0;
  double t = (s > std::exp(1.0)) ? s / std::log(s) : 1.0 + s;
  for (int i = 0; i < 50; ++i) {
    double f = t * std::log(t) - s;
    double fp = std::log(t) + 1.0;
    double tn = t - f / fp;
    if (tn < 1.0) tn = 0.5 * (t + 1.0);
    if (std::abs(tn - t) < 1e-14 * tn) return tn;
    t = tn;
  }
  return t;
}

struct RuleKey {
  long long a, b;
  int n;
  bool operator<(const RuleKey& o) const {
    return std::tie(a, b, n) < std::tie(o.a, o.b, o.n);
  }
};

std::mutex g_cache_mutex;
std::map<RuleKey, std::shared_ptr<const QuadratureRule>> g_rule_cache;

}  // namespace

QuadratureRule gauss_jacobi_rule(double alpha, double beta, int n) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw std::invalid_argument("gauss_jacobi_rule: exponents must exceed -1");
  }
  if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n must be positive");

  std::vector<double> d(n), e(n), q(n, 0.0);
  const double ab = alpha + beta;
  double abi = 2.0 + ab;
  d[0] = (beta - alpha) / abi;
  if (n > 1) e[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((abi + 1.0) * abi * abi));
  const double a2b2 = beta * beta - alpha * alpha;
  for (int i = 2; i <= n; ++i) {
    abi = 2.0 * i + ab;
    d[i - 1] = a2b2 / ((abi - 2.0) * abi);
    if (i < n) {
      double abi2 = abi * abi;
      e[i - 1] =
          std::sqrt(4.0 * i * (i + alpha) * (i + beta) * (i + ab) / ((abi2 - 1.0) * abi2));
    }
  }
  // zeroth moment 2^{a+b+1} B(a+1, b+1), via logs so large exponents survive
  double log_mu0 = (ab + 1.0) * 0.6931471805599453 +
                   std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  if (log_mu0 > 709.0) throw std::runtime_error("gauss_jacobi_rule: zeroth moment overflow");

  q[0] = 1.0;
  tridiag_ql(d, e, q);

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.n = n;
  rule.nodes = std::move(d);
  rule.weights.resize(n);
  double mu0 = std::exp(log_mu0);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * q[i] * q[i];
  return rule;
}

std::shared_ptr<const QuadratureRule> gauss_jacobi_rule_cached(double alpha, double beta, int n) {
  RuleKey key{llround(alpha * 1e12), llround(beta * 1e12), n};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_rule_cache.find(key);
    if (it != g_rule_cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(alpha, beta, n));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_rule_cache.emplace(key, std::move(rule)).first->second;
}

int select_mesh_size(Cplx b, Cplx z, double target_error) {
  double az = std::abs(z);
  if (az < 1e-30) return 8;
  double x_plus = std::max(z.real(), 0.0);
  double arg = (4.0 / (std::exp(1.0) * az)) *
               (x_plus + (3.0 - 2.0 * b.real()) * 0.6931471805599453 +
                std::log(1.0 / std::max(target_error, 1e-16)));
  double nreq = std::exp(1.0) * az / 8.0 * newton_t_logt(arg);
  int n = int(std::ceil(nreq));
  return std::clamp(n, 8, 1024);
}

namespace {

MethodResult weighted_sum(const QuadratureRule& rule, Cplx log_pref, double im_alpha,
                          double im_beta, const std::function<Cplx(double)>& f) {
  Cplx sum{0, 0};
  double abs_sum = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    double t = rule.nodes[i];
    Cplx g = f(t);
    if (im_alpha != 0.0) g *= std::exp(Cplx(0.0, im_alpha * std::log1p(-t)));
    if (im_beta != 0.0) g *= std::exp(Cplx(0.0, im_beta * std::log1p(t)));
    Cplx term = rule.weights[i] * g;
    sum += term;
    abs_sum += std::abs(term);
    if (!is_finite(sum)) return MethodResult::failed(Status::Overflow, i + 1);
  }
  if (std::abs(sum) == 0.0) return MethodResult::failed(Status::Overflow, rule.n);
  ExpCombine e = exp_scaled(log_pref, sum);
  if (e.overflow || e.underflow) return MethodResult::failed(Status::Overflow, rule.n);
  double est = kEps * (abs_sum / std::abs(sum)) * std::sqrt(double(rule.n));
  return MethodResult::converged(e.value, rule.n, est);
}

}  // namespace

MethodResult m_gauss_jacobi(const ParamsM& p, const QuadratureRule& rule,
                            const EngineOptions& opt) {
  if (!(p.b.real() > p.a.real() && p.a.real() > 0.0)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  Cplx log_pref = 0.5 * p.z + (Cplx(1, 0) - p.b) * Cplx(0.6931471805599453, 0.0) -
                  log_gamma(p.a) - log_gamma(p.b - p.a);
  if (!opt.regularized) log_pref += log_gamma(p.b);
  MethodResult r = weighted_sum(rule, log_pref, (p.b - p.a).imag(), p.a.imag() - 0.0,
                                [&](double t) { return std::exp(0.5 * p.z * t); });
  if (r.ok() && std::abs(p.z.imag()) > 100.0) {
    r.est_error = std::max(r.est_error, 1e-4);  // oscillatory integrand warning
  }
  return r;
}

MethodResult f_gauss_jacobi(const ParamsF& p, const QuadratureRule& rule,
                            const EngineOptions& opt) {
  if (!(p.c.real() > p.b.real() && p.b.real() > 0.0)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  if (p.z.imag() == 0.0 && p.z.real() >= 1.0) {
    return MethodResult::failed(Status::NotApplicable);  // |arg(1-z)| < pi required
  }
  Cplx log_pref = (Cplx(1, 0) - p.c) * Cplx(0.6931471805599453, 0.0) - log_gamma(p.b) -
                  log_gamma(p.c - p.b);
  if (!opt.regularized) log_pref += log_gamma(p.c);
  Cplx one_minus_half_z = Cplx(1, 0) - 0.5 * p.z;
  return weighted_sum(rule, log_pref, (p.c - p.b).imag(), p.b.imag(), [&](double t) {
    return std::exp(-p.a * std::log(one_minus_half_z - 0.5 * p.z * t));
  });
}

namespace {

template <typename Params, typename Engine>
MethodResult doubled(const Params& p, double alpha, double beta, int n, Engine&& engine) {
  if (!(alpha > -1.0 && beta > -1.0)) return MethodResult::failed(Status::NotApplicable);
  std::shared_ptr<const QuadratureRule> r1, r2;
  try {
    r1 = gauss_jacobi_rule_cached(alpha, beta, n);
    r2 = gauss_jacobi_rule_cached(alpha, beta, std::min(2 * n, 2048));
  } catch (const std::exception&) {
    return MethodResult::failed(Status::Overflow);
  }
  MethodResult a = engine(p, *r1);
  MethodResult b = engine(p, *r2);
  if (!b.ok()) return b;
  if (!a.ok()) return a;
  double diff = std::abs(a.value - b.value) / std::max(std::abs(b.value), 1e-300);
  b.est_error = std::max(b.est_error, diff);
  b.terms = r2->n;
  return b;
}

}  // namespace

MethodResult m_gauss_jacobi_auto(const ParamsM& p, const EngineOptions& opt,
                                 double target_error) {
  if (!(p.b.real() > p.a.real() && p.a.real() > 0.0)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  int n = select_mesh_size(p.b, p.z, target_error);
  return doubled(p, (p.b - p.a).real() - 1.0, p.a.real() - 1.0, n,
                 [&](const ParamsM& q, const QuadratureRule& r) { return m_gauss_jacobi(q, r, opt); });
}

MethodResult f_gauss_jacobi_auto(const ParamsF& p, const EngineOptions& opt,
                                 double target_error) {
  if (!(p.c.real() > p.b.real() && p.b.real() > 0.0)) {
    return MethodResult::failed(Status::NotApplicable);
  }
  // the confluent mesh bound, reused with an |a|-inflated argument since the
  // kernel (1-zt)^{-a} steepens with |a|
  int n = select_mesh_size(p.c, p.z * std::max(1.0, std::abs(p.a)), target_error);
  return doubled(p, (p.c - p.b).real() - 1.0, p.b.real() - 1.0, n,
                 [&](const ParamsF& q, const QuadratureRule& r) { return f_gauss_jacobi(q, r, opt); });
}

}  // namespace hyperg
