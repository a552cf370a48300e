#pragma once

#include "homps/algebra.hpp"

namespace homps {

/// Module (V, S, T, beta) over a Hom-Poisson algebra: S the Lie-side action,
/// T the associative-side action, both stored algebra-index first.
struct PoissonModule {
    HomPoissonAlgebra base;
    std::size_t vdim = 0;
    LinearMap beta;
    ActionTensor S;
    ActionTensor T;
};

/// (P, ad, L, alpha): the algebra acting on itself by bracket and product.
PoissonModule adjoint_module(const HomPoissonAlgebra& p);

/// (P*, ad*, -L*, alpha*) on the dual basis.
PoissonModule coadjoint_module(const HomPoissonAlgebra& p);

/// Representation of a Hom-Lie algebra on (V, beta):
///   rep.beta_compat   beta(rho(x)v) - rho(alpha(x))beta(v)
///   rep.bracket       rho([x,y])beta - rho(alpha(x))rho(y) + rho(alpha(y))rho(x)
ResidualSet check_lie_rep(const HomLieAlgebra& l, const ActionTensor& rho, const LinearMap& beta);

/// Representation of a (commutative) Hom-associative algebra on (V, nu):
/// mu(xy)nu - mu(alpha(x))mu(y) over basis pairs.
Residual check_assoc_rep(const HomAssocAlgebra& a, const ActionTensor& mu, const LinearMap& nu);

/// Full module battery: base validity, both sub-representations, the two
/// beta compatibilities, and the two mixed action identities.
ResidualSet check_poisson_module(const PoissonModule& m);

/// The semidirect structure on base + V:
///   {x1+v1, x2+v2} = {x1,x2} + S(x1)v2 - S(x2)v1
///   (x1+v1)(x2+v2) = x1 x2 + T(x1)v2 + T(x2)v1
/// with twist alpha + beta. Valid iff the module is (checked by the caller).
HomPoissonAlgebra semidirect_product(const PoissonModule& m);

/// The extra hypotheses under which the dual (V*, S*, -T*, beta*) is again a
/// module:
///   dualizable.s_twist_swap    beta(S(alpha(x))v) - S(x)beta(v)
///   dualizable.t_beta_commute  beta(T(x)v) - T(x)beta(v)
///   dualizable.s_product       S(xy)beta - S(x)T(alpha(y)) - S(y)T(alpha(x))
///   dualizable.t_bracket       T([x,y])beta - T(y)S(alpha(x)) + S(x)T(alpha(y))
ResidualSet dual_module_hypotheses(const PoissonModule& m);

/// Builds (V*, S*, -T*, beta*). Throws precondition_error("HypothesisViolated")
/// naming the first failing hypothesis when the conditions above do not hold.
PoissonModule dual_module(const PoissonModule& m);

} // namespace homps
