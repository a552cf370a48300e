#pragma once

#include "homps/modules.hpp"

namespace homps {

/// Two Hom-Lie algebras acting on each other: rho1 maps L1 into
/// endomorphisms of L2, rho2 the other way round.
struct MatchedPairLie {
    HomLieAlgebra L1, L2;
    ActionTensor rho1, rho2;
};

struct MatchedPairAssoc {
    HomAssocAlgebra A1, A2;
    ActionTensor mu1, mu2;
};

/// Hom-Poisson version: rho/mu act with the bracket/product of the opposite
/// side, four actions in total.
struct MatchedPairPoisson {
    HomPoissonAlgebra P1, P2;
    ActionTensor rho1, mu1; // P1 on P2
    ActionTensor rho2, mu2; // P2 on P1
};

ResidualSet check_matched_pair_lie(const MatchedPairLie& mp);
HomLieAlgebra bowtie_lie(const MatchedPairLie& mp);

ResidualSet check_matched_pair_assoc(const MatchedPairAssoc& mp);
HomAssocAlgebra bowtie_assoc(const MatchedPairAssoc& mp);

ResidualSet check_matched_pair_poisson(const MatchedPairPoisson& mp);
HomPoissonAlgebra bowtie_poisson(const MatchedPairPoisson& mp);

/// Symmetric bilinear form given by its Gram matrix on the basis.
struct BilinearForm {
    std::size_t dim = 0;
    LinearMap gram; // gram(i,j) = B(e_i, e_j)

    static BilinearForm hyperbolic(std::size_t half); // pairs e_i with e_{half+i}
};

/// Residuals: form.symmetry, form.nondegenerate (boolean), and the two
/// invariance identities B([x,y],alpha(z)) = B(alpha(x),[y,z]) and
/// B(xy,alpha(z)) = B(alpha(x),yz).
ResidualSet check_invariant_form(const HomPoissonAlgebra& p, const BilinearForm& b);

/// Basis split of one ambient algebra into the two halves of a Manin triple.
struct ManinPartition {
    std::vector<std::size_t> plus, minus;
};

/// Manin triple battery on an ambient algebra with a basis partition: ambient
/// validity, closure of each part under both operations and the twist, the
/// covering/disjointness of the partition, isotropy of both parts, and the
/// invariant-form battery. Throws precondition_error("PartitionInvalid") when
/// the index sets do not partition the coordinates.
ResidualSet check_manin_triple(const HomPoissonAlgebra& p, const ManinPartition& split,
                               const BilinearForm& b);

/// The coadjoint matched pair (ad*, -L*, ad*, -L*) of P and a structure on
/// its dual space.
MatchedPairPoisson coadjoint_matched_pair(const HomPoissonAlgebra& p, const HomPoissonAlgebra& pstar);

struct StandardManin {
    HomPoissonAlgebra algebra; // on P + P*
    BilinearForm form;         // <x,b*> + <a*,y>
    ManinPartition split;
};

/// The bowtie of the coadjoint matched pair together with the canonical
/// pairing form; pstar is read on the dual basis and must have dim(P).
StandardManin standard_manin_triple(const HomPoissonAlgebra& p, const HomPoissonAlgebra& pstar);

} // namespace homps
