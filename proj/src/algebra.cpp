#include "homps/algebra.hpp"

#include <functional>

namespace homps {

namespace {

void require_square(const LinearMap& m, std::size_t dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

void require_dim(const StructureTensor& c, std::size_t dim, const char* what) {
    if (c.dim() != dim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

// Residual of a vector-valued identity quantified over basis pairs.
Residual pair_residual(const std::string& label, std::size_t dim, std::size_t out_dim,
                       const std::function<Coords(std::size_t, std::size_t)>& lhs_minus_rhs) {
    ResidualBuilder b(label, {dim, dim, out_dim});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Coords v = lhs_minus_rhs(i, j);
            for (std::size_t k = 0; k < out_dim; ++k)
                b.at({i, j, k}) = v[k];
        }
    return std::move(b).done();
}

Residual triple_residual(const std::string& label, std::size_t dim, std::size_t out_dim,
                         const std::function<Coords(std::size_t, std::size_t, std::size_t)>& lhs_minus_rhs) {
    ResidualBuilder b(label, {dim, dim, dim, out_dim});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Coords v = lhs_minus_rhs(i, j, k);
                for (std::size_t l = 0; l < out_dim; ++l)
                    b.at({i, j, k, l}) = v[l];
            }
    return std::move(b).done();
}

} // namespace

HomAssocAlgebra assoc_part(const HomPoissonAlgebra& p) { return {p.dim, p.alpha, p.mul, std::nullopt}; }

HomLieAlgebra lie_part(const HomPoissonAlgebra& p) { return {p.dim, p.alpha, p.bracket}; }

HomPoissonAlgebra zero_poisson(std::size_t dim) {
    return {dim, LinearMap::identity(dim), StructureTensor(dim), StructureTensor(dim)};
}

ResidualSet check_hom_associative(const HomAssocAlgebra& a, bool require_commutative) {
    require_square(a.alpha, a.dim, "alpha");
    require_dim(a.mul, a.dim, "mul");
    std::size_t n = a.dim;
    const auto& al = a.alpha;
    const auto& mul = a.mul;

    ResidualSet out;

    out.push_back(pair_residual("assoc.twist_multiplicative", n, n, [&](std::size_t i, std::size_t j) {
        Coords prod = mul.apply(basis_vector(n, i), basis_vector(n, j));
        return al.apply(prod) - mul.apply(al.column(i), al.column(j));
    }));

    out.push_back(triple_residual("assoc.hom_associativity", n, n,
                                  [&](std::size_t i, std::size_t j, std::size_t k) {
        Coords bc = mul.apply(basis_vector(n, j), basis_vector(n, k));
        Coords ab = mul.apply(basis_vector(n, i), basis_vector(n, j));
        return mul.apply(al.column(i), bc) - mul.apply(ab, al.column(k));
    }));

    if (require_commutative) {
        out.push_back(pair_residual("assoc.commutativity", n, n, [&](std::size_t i, std::size_t j) {
            return mul.apply(basis_vector(n, i), basis_vector(n, j)) -
                   mul.apply(basis_vector(n, j), basis_vector(n, i));
        }));
    }

    if (a.unit) {
        const Coords& u = *a.unit;
        if (u.size() != n)
            throw shape_error("unit has wrong shape", "unit");
        {
            ResidualBuilder b("assoc.unit_left", {n, n});
            for (std::size_t j = 0; j < n; ++j) {
                Coords v = mul.apply(u, basis_vector(n, j)) - al.column(j);
                for (std::size_t k = 0; k < n; ++k)
                    b.at({j, k}) = v[k];
            }
            out.push_back(std::move(b).done());
        }
        {
            ResidualBuilder b("assoc.unit_right", {n, n});
            for (std::size_t j = 0; j < n; ++j) {
                Coords v = mul.apply(basis_vector(n, j), u) - al.column(j);
                for (std::size_t k = 0; k < n; ++k)
                    b.at({j, k}) = v[k];
            }
            out.push_back(std::move(b).done());
        }
        {
            ResidualBuilder b("assoc.unit_fixed", {n});
            Coords v = al.apply(u) - u;
            for (std::size_t k = 0; k < n; ++k)
                b.at({k}) = v[k];
            out.push_back(std::move(b).done());
        }
    }

    return out;
}

ResidualSet check_hom_lie(const HomLieAlgebra& l) {
    require_square(l.alpha, l.dim, "alpha");
    require_dim(l.bracket, l.dim, "bracket");
    std::size_t n = l.dim;
    const auto& al = l.alpha;
    const auto& br = l.bracket;

    ResidualSet out;

    out.push_back(pair_residual("lie.antisymmetry", n, n, [&](std::size_t i, std::size_t j) {
        return br.apply(basis_vector(n, i), basis_vector(n, j)) +
               br.apply(basis_vector(n, j), basis_vector(n, i));
    }));

    out.push_back(pair_residual("lie.twist_morphism", n, n, [&](std::size_t i, std::size_t j) {
        Coords bij = br.apply(basis_vector(n, i), basis_vector(n, j));
        return al.apply(bij) - br.apply(al.column(i), al.column(j));
    }));

    out.push_back(triple_residual("lie.hom_jacobi", n, n,
                                  [&](std::size_t i, std::size_t j, std::size_t k) {
        auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
            return br.apply(al.column(x), br.apply(basis_vector(n, y), basis_vector(n, z)));
        };
        return term(i, j, k) + term(j, k, i) + term(k, i, j);
    }));

    return out;
}

Residual check_leibniz(const HomPoissonAlgebra& p) {
    require_square(p.alpha, p.dim, "alpha");
    require_dim(p.mul, p.dim, "mul");
    require_dim(p.bracket, p.dim, "bracket");
    std::size_t n = p.dim;
    const auto& al = p.alpha;
    const auto& mul = p.mul;
    const auto& br = p.bracket;

    return triple_residual("poisson.leibniz", n, n,
                           [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords yz = mul.apply(basis_vector(n, y), basis_vector(n, z));
        Coords lhs = br.apply(al.column(x), yz);
        Coords rhs = mul.apply(al.column(y), br.apply(basis_vector(n, x), basis_vector(n, z))) +
                     mul.apply(al.column(z), br.apply(basis_vector(n, x), basis_vector(n, y)));
        return lhs - rhs;
    });
}

ResidualSet check_hom_poisson(const HomPoissonAlgebra& p) {
    ResidualSet out = check_hom_associative(assoc_part(p), /*require_commutative=*/true);
    for (auto& r : check_hom_lie(lie_part(p)))
        out.push_back(std::move(r));
    out.push_back(check_leibniz(p));
    return out;
}

ResidualSet check_poisson_homomorphism(const LinearMap& f, const HomPoissonAlgebra& src,
                                       const HomPoissonAlgebra& dst) {
    if (f.cols() != src.dim || f.rows() != dst.dim)
        throw shape_error("homomorphism matrix has wrong shape", "f");
    std::size_t n = src.dim;
    std::size_t m = dst.dim;

    ResidualSet out;

    out.push_back(pair_residual("hom.bracket", n, m, [&](std::size_t i, std::size_t j) {
        Coords lhs = f.apply(src.bracket.apply(basis_vector(n, i), basis_vector(n, j)));
        Coords rhs = dst.bracket.apply(f.column(i), f.column(j));
        return lhs - rhs;
    }));

    out.push_back(pair_residual("hom.product", n, m, [&](std::size_t i, std::size_t j) {
        Coords lhs = f.apply(src.mul.apply(basis_vector(n, i), basis_vector(n, j)));
        Coords rhs = dst.mul.apply(f.column(i), f.column(j));
        return lhs - rhs;
    }));

    {
        LinearMap d = f * src.alpha - dst.alpha * f;
        ResidualBuilder b("hom.twist_intertwine", {m, n});
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b.at({i, j}) = d(i, j);
        out.push_back(std::move(b).done());
    }

    return out;
}

} // namespace homps
