#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperg/types.hpp"

namespace hyperg {

// sin(pi z) with range reduction on Re(z); exact at integers, no precision loss
// for large |Re(z)|.
Cplx sin_pi(Cplx z);

// log(sin(pi z)) on some branch consistent under exp; safe for large |Im(z)|.
Cplx log_sin_pi(Cplx z);

// Principal-branch log Gamma via a 15-term Lanczos expansion (g = 607/128),
// reflection for Re(z) < 0.5. Throws std::domain_error within kIntTol of a
// non-positive integer.
Cplx log_gamma(Cplx z);

// 1/Gamma(z); entire, exactly 0 within kIntTol of non-positive integers.
Cplx reciprocal_gamma(Cplx z);

// log of the rising factorial (mu)_j as a sum of principal logs, so that
// exp of it reproduces the product. nullopt when some factor mu+k is within
// kIntTol of 0 (the product is an exact zero).
std::optional<Cplx> rising_factorial_log(Cplx mu, int j);

// B_2, B_4, ..., B_60.
std::span<const double> bernoulli_even();

struct BesselOptions {
  // Taylor loses ~0.37*|z| decimal digits to cancellation at small orders,
  // so it is only the primary branch for small |z|; the backward ladder
  // covers the band between it and the Hankel region.
  double taylor_z_max = 10.0;   // Taylor branch below this |z|
  double taylor_order_factor = 7.0;   // ... or when |nu| >= factor*|z|
  double hankel_z_min = 25.0;         // Hankel needs |z| at least this
  double hankel_order_max_sq = 0.35;  // ... and |nu|^2 <= this*|z|
};

// Bessel J of complex order and argument, |arg z| < pi.
// Taylor series for small |z| or order >> |z|; Hankel asymptotics for large
// |z| and small order; otherwise a backward order-ladder anchored on a
// Taylor evaluation at Re(nu) ~ taylor_order_factor*|z| (the ladder is the
// standard backward-recurrence scheme, needed because neither expansion
// covers the nu ~ z transition zone).
MethodResult bessel_j(Cplx nu, Cplx z, const BesselOptions& opt = {});

// J_{nu0+k}(z), k = 0..count-1, as mantissa*exp(scale) pairs from one ladder
// pass. Values with |mantissa| = 0 are exact underflows.
struct ScaledSeq {
  std::vector<Cplx> mantissa;
  std::vector<double> log_scale;
  Status status = Status::Converged;
};
ScaledSeq bessel_j_ladder(Cplx nu0, int count, Cplx z, const BesselOptions& opt = {});

// exp(log_pref)*factor with overflow/underflow accounting: overflow reports
// Status::Overflow, underflow flushes to zero and stays Converged.
struct ExpCombine {
  Cplx value{0, 0};
  bool overflow = false;
  bool underflow = false;  // result not representable toward zero
};
ExpCombine exp_scaled(Cplx log_pref, Cplx factor = Cplx{1, 0});

// sum / Gamma(g), log-assembled away from the Gamma poles and a direct
// product inside the near-pole band (where the reciprocal is tiny and the
// log form would throw).
ExpCombine scale_reciprocal_gamma(Cplx g, Cplx sum);

}  // namespace hyperg
