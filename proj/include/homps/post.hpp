#pragma once

#include "homps/bialgebra.hpp"

namespace homps {

/// Five-operation splitting of a Hom-Poisson structure: a bracket with a
/// non-symmetric companion (diamond) and a commutative product with a
/// one-sided companion (succ), all sharing one twist.
struct PostHomPoisson {
    std::size_t dim = 0;
    LinearMap alpha;
    StructureTensor lie;     // [.,.]
    StructureTensor diamond; // the bracket companion
    StructureTensor dot;     // commutative product
    StructureTensor succ;    // the product companion
};

/// A module whose carrier is itself a Hom-Poisson algebra (V carries its own
/// bracket and product; V.alpha is the module twist).
struct ModuleHomPoisson {
    HomPoissonAlgebra base;
    HomPoissonAlgebra V;
    ActionTensor S, T;
};

/// (P, [.,.], o, ad, L, alpha): the algebra over itself.
ModuleHomPoisson self_module(const HomPoissonAlgebra& p);

/// R: V -> base intertwining the actions up to weight lambda.
struct OOperator {
    LinearMap R; // base.dim x V.dim
    Rational weight;
    ModuleHomPoisson module;
};

/// rho lands in derivations of Lp: representation residuals plus the
/// derivation identity rho(x)[u,v]' - [rho(x)u, v]' - [u, rho(x)v]'.
ResidualSet check_l_hom_lie_algebra(const HomLieAlgebra& l, const HomLieAlgebra& lp,
                                    const ActionTensor& rho);

/// mu is twist-multiplicative into End(R) and acts by twisted module maps:
///   mha.multiplicative   mu(xy) beta - mu(alpha(x)) mu(y)
///   mha.action_product   mu(alpha(x))(uv) - (mu(x)u) beta(v)
///   mha.beta_compat      beta(mu(x)v) - mu(alpha(x)) beta(v)
ResidualSet check_module_hom_algebra(const HomAssocAlgebra& a, const HomAssocAlgebra& rg,
                                     const ActionTensor& mu);

/// Full battery for the module-with-structure: V validity, the Lie-side
/// derivation module, the associative-side module algebra, the plain module
/// conditions, and the four mixed identities.
ResidualSet check_module_hom_poisson(const ModuleHomPoisson& m);

/// [(x,u),(y,v)] = ([x,y], S(x)v - S(y)u + [u,v]_V),
/// (x,u)(y,v) = (xy, T(x)v + T(y)u + u v) with twist alpha + beta; a
/// Hom-Poisson algebra exactly when the module battery passes.
HomPoissonAlgebra module_semidirect(const ModuleHomPoisson& m);

ResidualSet check_post_hom_lie(const StructureTensor& lie, const StructureTensor& diamond,
                               const LinearMap& alpha);

ResidualSet check_comm_dendriform(const StructureTensor& dot, const StructureTensor& succ,
                                  const LinearMap& alpha);

/// Post-Hom-Lie + commutative dendriform batteries plus the five mixed
/// compatibilities.
ResidualSet check_post_hom_poisson(const PostHomPoisson& p);

/// {x,y} = x<>y - y<>x + [x,y] and x o y = x>y + y>x + x.y on the same
/// space with the same twist.
HomPoissonAlgebra associated_hom_poisson(const PostHomPoisson& p);

/// Residuals of the weighted intertwining identities; requires a valid
/// module first (throws precondition_error("InvalidModule")).
ResidualSet check_o_operator(const OOperator& o);

/// The same identity battery specialized to the self-module; no module gate.
ResidualSet check_rota_baxter(const HomPoissonAlgebra& p, const LinearMap& r, const Rational& lambda);

/// {u,v} = lambda[u,v]_V, u<>v = S(R(u))v, u.v = lambda u v, u>v = T(R(u))v
/// on V with the module twist. Throws "InvalidOOperator" on a failing
/// operator.
PostHomPoisson post_from_o_operator(const OOperator& o);

/// Skew and symmetric parts: phi = (r - tau r)/2, psi = (r + tau r)/2.
std::pair<RTensor, RTensor> symmetric_parts(const RTensor& r);

/// Requires the bialgebra's comultiplications to be the coboundary ones of r
/// (throws "CoalgebraMismatch"); residuals are the two Yang-Baxter tensors
/// plus the full coboundary battery.
ResidualSet check_quasitriangular(const HomPoissonBialgebra& b, const RTensor& r,
                                  HaybeVariant variant = HaybeVariant::standard);

/// The dual-space module {a*,b*} = -2 ad*(psi(a*))b*, a*.b* = 2 L*(psi(a*))b*
/// with actions (ad*, -L*, alpha*), together with r as a weight-1 operator
/// from the dual. Throws "NotQuasitriangular" unless check_quasitriangular
/// passes.
std::pair<ModuleHomPoisson, OOperator> quasitriangular_dual_module(const HomPoissonBialgebra& b,
                                                                   const RTensor& r);

/// The four dual-space operations built directly from r and psi; computed
/// independently of the two-step route so the two can be compared entrywise.
PostHomPoisson post_from_quasitriangular(const HomPoissonBialgebra& b, const RTensor& r);

} // namespace homps
