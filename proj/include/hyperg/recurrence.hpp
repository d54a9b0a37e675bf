#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperg/confluent.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

// y_{n+1} + b_n y_n + a_n y_{n-1} = 0, n >= 1.
struct RecurrenceSpec {
  std::function<Cplx(int)> coeff_a;
  std::function<Cplx(int)> coeff_b;
  std::optional<Cplx> limit_a;
  std::optional<Cplx> limit_b;
  Cplx normalization{1, 0};  // known f_0
  std::string label;
};

struct CharRoots {
  Cplx t1, t2;  // |t1| <= |t2|
  bool equal_modulus = false;
};

// Roots of t^2 + b_inf t + a_inf = 0. The minimal solution's consecutive-term
// ratio tends to t1 when the moduli differ; equal moduli means this test
// identifies nothing. Throws std::logic_error when limits are absent.
CharRoots characteristic_roots(const RecurrenceSpec& spec);

// y_0..y_n by direct forward application. Reliable only for dominant
// solutions; overflow shows up as non-finite entries.
std::vector<Cplx> forward_recur(const RecurrenceSpec& spec, Cplx y0, Cplx y1, int n);

// Miller's algorithm: f_k ~ (f_0 / y_0^N) y_k^N with trial start at N,
// doubling N from k+20 until the estimate settles to tol (relative).
MethodResult miller(const RecurrenceSpec& spec, int k, double tol);

// Olver's algorithm: adaptive forward elimination (p
// and r sequences), O(1) convergence test per step, one back-substitution
// after acceptance. Joint p/r rescaling controls overflow.
MethodResult olver(const RecurrenceSpec& spec, int k, double tol);

// Monic-form specs for the confluent recurrences (regularized-M scaling,
// which keeps all minimal-solution Gamma prefactors out of the arithmetic).
RecurrenceSpec m_spec_plus0(Cplx a, Cplx b, Cplx z);   // chain M(a+n; b; z)
RecurrenceSpec m_spec_0plus(Cplx a, Cplx b, Cplx z);   // chain M(a; b+n; z); roots 0, 1/z
RecurrenceSpec m_spec_plusplus(Cplx a, Cplx b, Cplx z);  // chain M(a+n; b+n; z)

enum class MDirection { PlusZero, ZeroPlus, PlusPlus };
enum class FRelation { PlusPlus0, ZeroZeroPlus, PlusPlusMinus, PlusZeroMinus };
enum class MinimalBranch { WantedMinimal, WantedDominant };

using MBaseEval = std::function<MethodResult(const ParamsM&, const EngineOptions&)>;
using FBaseEval = std::function<MethodResult(const ParamsF&, const EngineOptions&)>;

// Computes M(p) from base evaluations at easier parameters.
//   PlusZero: base at a - steps (negative steps put the base above the target
//             and recurse downward, e.g. terminating chains ending below 0);
//   ZeroPlus: base at b + steps, recursed downward (steps >= 1);
//   PlusPlus: Miller along the minimal chain from base at (a-steps, b-steps).
// steps = 0 is the identity.
MethodResult m_recurrence_shift(const ParamsM& p, MDirection dir, int steps,
                                const MBaseEval& base, const EngineOptions& opt = {});

// Gauss analogue. Internally recurses in unregularized 2F1 scaling (bases are
// requested unregularized) and converts at the end.
//   PlusPlus0: base at (a-steps, b-steps, c), forward; requires z not in (-inf,0].
//   ZeroZeroPlus: base at c + steps, downward; requires Re(z) <= 1/2 (+tol),
//                 where the wanted chain is the minimal direction.
//   PlusPlusMinus / PlusZeroMinus: expert relations; `branch` must say whether
//                 the wanted chain is minimal (Miller) or dominant (forward).
MethodResult f_recurrence_shift(const ParamsF& p, FRelation rel, int steps,
                                const FBaseEval& base, const EngineOptions& opt = {},
                                std::optional<MinimalBranch> branch = std::nullopt);

// Monic coefficients of the chain y_n = 2F1(a+da*n, b+db*n; c+dc*n; z),
// derived at runtime from the hypergeometric ODE via truncated-Taylor
// operator composition. Returns (a_n, b_n) of the genrec form at index n
// (i.e. the relation connecting chain members n-1, n, n+1).
std::pair<Cplx, Cplx> f_chain_coeffs(Cplx a, Cplx b, Cplx c, Cplx z, int da, int db, int dc,
                                     int n);

}  // namespace hyperg
