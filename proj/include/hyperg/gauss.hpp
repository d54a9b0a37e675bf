#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hyperg/confluent.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

// Taylor series inside the unit disk (realistically |z| <~ 0.9). Sums the
// regularized series directly when c is within kRegTol of a non-positive
// integer.
MethodResult f_taylor_a(const ParamsF& p, const EngineOptions& opt = {});
MethodResult f_taylor_b(const ParamsF& p, const EngineOptions& opt = {});

// Single-fraction form; best for |c| < 1 or c near an integer.
MethodResult f_single_fraction(const ParamsF& p, const EngineOptions& opt = {});

// Variable transformation plan: the six maps of z onto a disk |w| <= rho.
struct TransformPlan {
  int case_id = 0;      // 1..6
  Cplx w{0, 0};
  int formula_id = 0;   // 0 identity, 1,2 Pfaff-type (1/(1-z), z/(z-1)),
                        // 3 (1-z), 4 (1-1/z), 5 (1/z)
  std::vector<std::pair<Cplx, Cplx>> prefactors;  // (base, exponent) pairs
  bool valid = false;
};

// Picks the map with minimal |w| among those with |w| <= rho; ties resolve
// so that real z reproduces the standard interval assignment
// (-inf,-1) -> 1/(1-z), [-1,0) -> z/(z-1), [0,1/2] -> z, (1/2,1] -> 1-z,
// (1,2] -> 1-1/z, (2,inf) -> 1/z. Invalid plan when every |w| > rho
// (neighborhoods of exp(+-i pi/3)).
TransformPlan plan_transform(Cplx z, double rho);

using FInnerEval = std::function<MethodResult(const ParamsF&)>;

// Evaluates F(a,b;c;z) through the plan's connection formula, calling
// `inner` for the right-hand-side regularized F values at w. NotApplicable
// when the formula's Gamma arguments are within 1e-6 of the integer
// degeneracies (b-a for the 1/(1-z) and 1/z maps, c-a-b for the 1-z and
// 1-1/z maps).
MethodResult f_apply_transform(const ParamsF& p, const TransformPlan& plan,
                               const FInnerEval& inner, const EngineOptions& opt = {});

// Buhring's continuation about z0 (default 1/2); converges outside the disk
// |z - z0| = max(|z0|, |z0-1|), requires b-a at least 1e-6 from any integer.
MethodResult f_buhring(const ParamsF& p, Cplx z0 = Cplx{0.5, 0.0},
                       const EngineOptions& opt = {});

// Taylor re-expansion about z0 = r0 z/|z| (r0 = 0.9 inside the closed unit
// disk, 1.1 outside): q0, q1 come from the bootstrap, the remaining
// coefficients from the ODE-derived three-term recurrence. Gamma-free, so it
// covers the integer-degenerate transform cases.
struct BootstrapValues {
  MethodResult q0;  // F(a,b;c;z0)
  MethodResult q1;  // a b F(a+1,b+1;c+1;z0)
};
using FBootstrap = std::function<BootstrapValues(Cplx z0)>;
MethodResult f_taylor_about_z0(const ParamsF& p, const FBootstrap& bootstrap,
                               const EngineOptions& opt = {});

// Expansion core: given q0 = F(a,b;c;z0) and q1 = dF/dz at z0, evaluates the
// series at z and also returns the derivative there (for marching).
struct ExpandResult {
  MethodResult value;
  Cplx derivative{0, 0};
};
ExpandResult f_taylor_expand(Cplx a, Cplx b, Cplx c, Cplx z0, Cplx q0, Cplx q1, Cplx z);

// Gauss summation at z = 1: Gamma(c-a-b) rgamma(c-a) rgamma(c-b), requiring
// Re(c-a-b) > 0 and c-a, c-b away from non-positive integers.
MethodResult f_at_one(Cplx a, Cplx b, Cplx c, const EngineOptions& opt = {});

// Shared helper: regularized direct sum  sum_j (a)_j (b)_j rgamma(c+j) z^j/j!.
MethodResult f_taylor_direct_regularized(const ParamsF& p);

}  // namespace hyperg
