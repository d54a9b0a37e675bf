#pragma once

#include "hyperg/support.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

// Engines return the regularized function by default; the unregularized
// 1F1 (value times Gamma(b)) is used by the harness when the regularized
// value is not representable in double precision.
struct EngineOptions {
  bool regularized = true;
};

enum class AsymVariant { TermRecursion, IterativeSum };  // methods (a) and (b)

// Taylor series, term-by-term recursion. Sums the regularized series
// directly when b is within kRegTol of a non-positive integer.
MethodResult m_taylor_a(const ParamsM& p, const EngineOptions& opt = {});

// Taylor series via the three-term iterate S_j = S_{j-1} + (S_{j-1}-S_{j-2}) r_j z.
MethodResult m_taylor_b(const ParamsM& p, const EngineOptions& opt = {});

// Single-fraction form: one division per approximant; no rescaling, reports
// Overflow past 1e300 as the method inherently does.
MethodResult m_single_fraction(const ParamsM& p, const EngineOptions& opt = {});

// Bessel-function expansion with the D_j coefficient recursion; closed
// Bessel form when b = 2a. Effective when Re(a) and Re(z) have opposite
// signs and 10 <~ |a|,|z| <~ 100.
MethodResult m_buchholz(const ParamsM& p, const EngineOptions& opt = {});

// Large-|z| asymptotic series (two 2F0-type sums with log-space prefactors).
// Each sum must reach tol before its terms start growing, else NoConvergence.
MethodResult m_asymptotic(const ParamsM& p, AsymVariant variant = AsymVariant::TermRecursion,
                          const EngineOptions& opt = {});

// Shared helper: regularized direct sum  sum_j (a)_j rgamma(b+j) z^j / j!.
MethodResult m_taylor_direct_regularized(const ParamsM& p);

}  // namespace hyperg
