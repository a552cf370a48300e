#pragma once

#include "homps/linear_map.hpp"
#include "homps/residual.hpp"
#include "homps/tensor.hpp"

#include <optional>

namespace homps {

/// (A, mul, alpha), optionally unital. The listed axioms are checked by
/// check_hom_associative, never assumed.
struct HomAssocAlgebra {
    std::size_t dim = 0;
    LinearMap alpha;
    StructureTensor mul;
    std::optional<Coords> unit; // coordinates of 1 when the algebra has one
};

struct HomLieAlgebra {
    std::size_t dim = 0;
    LinearMap alpha;
    StructureTensor bracket;
};

/// Commutative twisted-associative product and twisted Lie bracket sharing
/// one twist, tied together by the Leibniz compatibility.
struct HomPoissonAlgebra {
    std::size_t dim = 0;
    LinearMap alpha;
    StructureTensor mul;
    StructureTensor bracket;
};

HomAssocAlgebra assoc_part(const HomPoissonAlgebra& p);
HomLieAlgebra lie_part(const HomPoissonAlgebra& p);

HomPoissonAlgebra zero_poisson(std::size_t dim);

/// Residuals over basis tuples:
///   assoc.twist_multiplicative   alpha(ab) - alpha(a)alpha(b)
///   assoc.hom_associativity      alpha(a)(bc) - (ab)alpha(c)
///   assoc.commutativity          ab - ba              (on request)
///   assoc.unit_*                 unit laws            (when a unit is given)
ResidualSet check_hom_associative(const HomAssocAlgebra& a, bool require_commutative = false);

/// Residuals: lie.antisymmetry, lie.twist_morphism, lie.hom_jacobi.
ResidualSet check_hom_lie(const HomLieAlgebra& l);

/// The twisted Leibniz rule [alpha(x), yz] - alpha(y)[x,z] - alpha(z)[x,y]
/// over all basis triples.
Residual check_leibniz(const HomPoissonAlgebra& p);

/// Commutative Hom-associative + Hom-Lie + Leibniz, one residual per axiom.
ResidualSet check_hom_poisson(const HomPoissonAlgebra& p);

/// f maps src coordinates to dst coordinates. Residuals of
/// f([x,y]) - [f x, f y], f(xy) - f(x)f(y) and f alpha_src - alpha_dst f.
ResidualSet check_poisson_homomorphism(const LinearMap& f, const HomPoissonAlgebra& src,
                                       const HomPoissonAlgebra& dst);

} // namespace homps
