#pragma once

#include <memory>
#include <vector>

#include "hyperg/confluent.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

struct QuadratureRule {
  double alpha = 0.0;  // Jacobi exponent on (1-t)
  double beta = 0.0;   // Jacobi exponent on (1+t)
  std::vector<double> nodes;    // strictly increasing, in (-1,1)
  std::vector<double> weights;  // positive for alpha,beta > -1
  int n = 0;
};

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights come from first eigenvector components times the zeroth
// moment. The eigensolve is a self-contained implicit-QL iteration.
// Throws std::invalid_argument for alpha,beta <= -1 or n < 1,
// std::runtime_error if the eigen-iteration fails to converge.
QuadratureRule gauss_jacobi_rule(double alpha, double beta, int n);

// Cached variant; keys round alpha/beta to 1e-12. Entries are immutable.
std::shared_ptr<const QuadratureRule> gauss_jacobi_rule_cached(double alpha, double beta, int n);

// Smallest mesh size N satisfying the e|z|/8 * t(...) bound for the
// confluent integrand, where t inverts s = t log t (Newton iteration).
// Clamped to [8, 1024].
int select_mesh_size(Cplx b, Cplx z, double target_error);

// Integral representation of M(a;b;z) for Re(b) > Re(a) > 0. The rule must
// have been built with alpha = Re(b-a-1), beta = Re(a-1); imaginary parts of
// the exponents are folded into the integrand at the nodes.
MethodResult m_gauss_jacobi(const ParamsM& p, const QuadratureRule& rule,
                            const EngineOptions& opt = {});

// Integral representation of F(a,b;c;z) for Re(c) > Re(b) > 0 and
// |arg(1-z)| < pi; rule exponents alpha = Re(c-b-1), beta = Re(b-1).
MethodResult f_gauss_jacobi(const ParamsF& p, const QuadratureRule& rule,
                            const EngineOptions& opt = {});

// Mesh-selected evaluation with an N vs 2N doubling self-check folded into
// est_error.
MethodResult m_gauss_jacobi_auto(const ParamsM& p, const EngineOptions& opt = {},
                                 double target_error = 1e-15);
MethodResult f_gauss_jacobi_auto(const ParamsF& p, const EngineOptions& opt = {},
                                 double target_error = 1e-15);

}  // namespace hyperg
