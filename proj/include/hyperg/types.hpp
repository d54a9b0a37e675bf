#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace hyperg {

using Cplx = std::complex<double>;

inline constexpr double kEps = 2.220446049250313e-16;
inline constexpr double kIntTol = 1e-14;      // "within tolerance of an integer"
inline constexpr double kRegTol = 1e-8;       // switch to direct regularized summation
inline constexpr int kSeriesCap = 500;        // term cap shared by all series engines

enum class Status : std::uint8_t {
  Converged,
  NoConvergence,   // series hit the term cap ('A')
  Overflow,        // not representable along the way or in the result ('B')
  NotApplicable,   // parameters outside the method's validity region ('C')
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::NoConvergence: return "no-convergence";
    case Status::Overflow: return "overflow";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct MethodResult {
  Cplx value{0.0, 0.0};
  int terms = 0;
  Status status = Status::NotApplicable;
  double est_error = std::numeric_limits<double>::infinity();

  static MethodResult converged(Cplx v, int n, double err) {
    // an estimate worse than 1e-3 cannot back even three digits; that is
    // the tables' non-convergence semantics, not a usable value
    if (!(err <= 1e-3) || !std::isfinite(std::abs(v))) {
      return {v, n, Status::NoConvergence, err};
    }
    return {v, n, Status::Converged, err};
  }
  static MethodResult failed(Status s, int n = 0) { return {Cplx{0, 0}, n, s, std::numeric_limits<double>::infinity()}; }
  bool ok() const { return status == Status::Converged; }
};

struct ParamsM {
  Cplx a, b, z;
};

struct ParamsF {
  Cplx a, b, c, z;
};

inline bool is_finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Distance from z to the nearest integer <= limit (no constraint if limit omitted).
inline double dist_to_integer(Cplx z) {
  return std::abs(z - Cplx(std::round(z.real()), 0.0));
}

inline bool near_integer(Cplx z, double tol = kIntTol) { return dist_to_integer(z) < tol; }

inline bool near_nonpos_integer(Cplx z, double tol = kIntTol) {
  return z.real() < 0.5 && near_integer(z, tol);
}

inline bool is_real(Cplx z) {
  return std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real()));
}

// Neumaier-compensated complex accumulator.
struct KahanSum {
  Cplx s{0, 0};
  Cplx comp{0, 0};
  void add(Cplx term) {
    Cplx t = s + term;
    double cr = (std::abs(s.real()) >= std::abs(term.real()))
                    ? (s.real() - t.real()) + term.real()
                    : (term.real() - t.real()) + s.real();
    double ci = (std::abs(s.imag()) >= std::abs(term.imag()))
                    ? (s.imag() - t.imag()) + term.imag()
                    : (term.imag() - t.imag()) + s.imag();
    comp += Cplx{cr, ci};
    s = t;
  }
  Cplx value() const { return s + comp; }
};

}  // namespace hyperg
