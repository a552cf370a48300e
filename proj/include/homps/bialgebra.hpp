#pragma once

#include "homps/legs.hpp"
#include "homps/matched.hpp"

namespace homps {

/// Algebra plus the two comultiplications: delta the Lie cobracket, Delta the
/// cocommutative coproduct.
struct HomPoissonBialgebra {
    HomPoissonAlgebra P;
    CoStructureTensor delta;
    CoStructureTensor Delta;
};

/// Which reading of the associative Yang-Baxter sum to use. The source text
/// ends the sum in a doubled 23*23 term whose unit legs collide; `standard`
/// is the usual 13*12 - 12*23 + 23*13 form, `as_printed` keeps the doubled
/// term and therefore returns a unit-padded tensor.
enum class HaybeVariant { standard, as_printed };

/// Reads a comultiplication as the structure constants of the dual space:
/// c*(i,j,k) = d(k,i,j).
StructureTensor dualize_costructure(const CoStructureTensor& d);
/// Inverse reindexing: the comultiplication whose dual product is c.
CoStructureTensor costructure_of(const StructureTensor& c);

/// Cocycle condition tying delta to the bracket:
/// delta([x,y]) - (ad(x)(x)alpha + alpha(x)ad(x))delta(y)
///             + (ad(y)(x)alpha + alpha(x)ad(y))delta(x).
Residual check_lie_cocycle(const HomLieAlgebra& l, const CoStructureTensor& delta);

/// Derivation condition tying Delta to the product:
/// Delta(ab) - (L(alpha(a))(x)alpha)Delta(b) - (alpha(x)R(alpha(b)))Delta(a).
Residual check_infinitesimal(const HomAssocAlgebra& a, const CoStructureTensor& Delta);

/// Coalgebra battery: co-antisymmetry, co-Jacobi and twist coinvariance for
/// delta; cocommutativity, co-associativity and twist coinvariance for Delta;
/// and the mixed coalgebra compatibility between the two.
ResidualSet check_poisson_coalgebra(const CoStructureTensor& delta, const CoStructureTensor& Delta,
                                    const LinearMap& alpha);

/// Everything: algebra axioms, coalgebra axioms, both cocycle conditions and
/// the two algebra-coalgebra compatibilities.
ResidualSet check_poisson_bialgebra(const HomPoissonBialgebra& b);

/// delta(x) = (ad(x) (x) alpha + alpha (x) ad(x)) r. Requires
/// (alpha(x)alpha)(r) = r; throws precondition_error("RNotAlphaInvariant").
CoStructureTensor coboundary_delta(const HomPoissonAlgebra& p, const RTensor& r);

/// Delta(x) = (L(x) (x) alpha - alpha (x) L(x)) r, same invariance
/// requirement.
CoStructureTensor coboundary_Delta(const HomPoissonAlgebra& p, const RTensor& r);

/// C(r) = [r12,r13] + [r12,r23] + [r13,r23].
Tensor3 chybe_residual(const HomLieAlgebra& l, const RTensor& r);

/// A(r); the standard variant is r13 r12 - r12 r23 + r23 r13, the as_printed
/// one replaces the last term by r23 r23 and is returned unit-padded.
Tensor3 haybe_residual(const HomAssocAlgebra& a, const RTensor& r,
                       HaybeVariant variant = HaybeVariant::standard);

/// W(e_k) = (alpha(x)Delta)delta(e_k) - (delta(x)alpha)Delta(e_k)
///        - (tau(x)alpha)(alpha(x)delta)Delta(e_k), one tensor per basis
/// element.
std::vector<Tensor3> w_residual(const HomPoissonAlgebra& p, const CoStructureTensor& delta,
                                const CoStructureTensor& Delta);

/// The closed-form expansion of W for coboundary comultiplications, stated
/// in terms of A(r), C(r) and the symmetrized invariances. Computed
/// separately so the two routes can be compared; they provably agree when
/// the twist is the identity.
std::vector<Tensor3> w_closed_form(const HomPoissonAlgebra& p, const RTensor& r);

/// The condition battery under which the coboundary delta and Delta make the
/// algebra a Hom-Poisson bialgebra:
///   coboundary.sym_bracket_invariance  (ad(x)(x)a + a(x)ad(x))(r + tau r)
///   coboundary.sym_product_invariance  (L(x)(x)a - a(x)L(x))(r + tau r)
///   coboundary.assoc_ybe_invariance    (L(x)(x)a(x)a - a(x)a(x)L(x)) A(r)
///   coboundary.lie_ybe_invariance      cyclic ad-twist applied to C(r)
///   coboundary.w                       W(x) per basis element
/// plus an advisory residual for the printed plus-sign reading of the
/// product invariance. Throws on non-invariant r.
ResidualSet check_coboundary_conditions(const HomPoissonAlgebra& p, const RTensor& r,
                                        HaybeVariant variant = HaybeVariant::standard);

struct DrinfeldDouble {
    HomPoissonAlgebra algebra; // on P + P*
    RTensor r;                 // sum of e_i (x) e_i*
    CoStructureTensor delta;   // coboundary comultiplications induced by r
    CoStructureTensor Delta;
    BilinearForm form;
    ManinPartition split;
};

/// The classical double: the standard Manin triple of P with the dual
/// structure read off delta* and Delta*, equipped with the canonical r and
/// its coboundary comultiplications. Throws
/// precondition_error("InvalidBialgebra") when the input fails its battery
/// and "RNotAlphaInvariant" when the canonical r is not twist-invariant.
DrinfeldDouble drinfeld_double(const HomPoissonBialgebra& b);

} // namespace homps
