#include "homps/post.hpp"

#include <functional>

namespace homps {

namespace {

void require_action(const ActionTensor& s, std::size_t adim, std::size_t vdim, const char* what) {
    if (s.adim() != adim || s.vdim() != vdim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

void require_dim(const StructureTensor& c, std::size_t dim, const char* what) {
    if (c.dim() != dim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

Residual triple_residual(const std::string& label, std::size_t dim,
                         const std::function<Coords(std::size_t, std::size_t, std::size_t)>& f) {
    ResidualBuilder b(label, {dim, dim, dim, dim});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Coords d = f(i, j, k);
                for (std::size_t l = 0; l < dim; ++l)
                    b.at({i, j, k, l}) = d[l];
            }
    return std::move(b).done();
}

Residual pair_residual(const std::string& label, std::size_t dim,
                       const std::function<Coords(std::size_t, std::size_t)>& f) {
    ResidualBuilder b(label, {dim, dim, dim});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Coords d = f(i, j);
            for (std::size_t k = 0; k < dim; ++k)
                b.at({i, j, k}) = d[k];
        }
    return std::move(b).done();
}

// Twist multiplicativity for one operation on one space.
Residual twist_morphism_residual(const std::string& label, const StructureTensor& op,
                                 const LinearMap& alpha) {
    std::size_t n = op.dim();
    return pair_residual(label, n, [&](std::size_t i, std::size_t j) {
        return alpha.apply(op.apply(basis_vector(n, i), basis_vector(n, j))) -
               op.apply(alpha.column(i), alpha.column(j));
    });
}

// The shared identity battery of a weighted operator, with no validity gate.
ResidualSet o_operator_residuals(const ModuleHomPoisson& m, const LinearMap& r,
                                 const Rational& lambda) {
    std::size_t n = m.base.dim;
    std::size_t v = m.V.dim;
    if (r.rows() != n || r.cols() != v)
        throw shape_error("operator matrix has wrong shape", "R");
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");

    ResidualSet out;

    {
        LinearMap d = m.base.alpha * r - r * m.V.alpha;
        ResidualBuilder b("o_operator.twist_intertwine", {n, v});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < v; ++j)
                b.at({i, j}) = d(i, j);
        out.push_back(std::move(b).done());
    }

    {
        ResidualBuilder b("o_operator.bracket", {v, v, n});
        for (std::size_t u = 0; u < v; ++u)
            for (std::size_t w = 0; w < v; ++w) {
                Coords ru = r.column(u), rw = r.column(w);
                Coords fu = basis_vector(v, u), fw = basis_vector(v, w);
                Coords inner = m.S.apply(ru, fw) - m.S.apply(rw, fu) +
                               lambda * m.V.bracket.apply(fu, fw);
                Coords d = m.base.bracket.apply(ru, rw) - r.apply(inner);
                for (std::size_t k = 0; k < n; ++k)
                    b.at({u, w, k}) = d[k];
            }
        out.push_back(std::move(b).done());
    }

    {
        ResidualBuilder b("o_operator.product", {v, v, n});
        for (std::size_t u = 0; u < v; ++u)
            for (std::size_t w = 0; w < v; ++w) {
                Coords ru = r.column(u), rw = r.column(w);
                Coords fu = basis_vector(v, u), fw = basis_vector(v, w);
                Coords inner = m.T.apply(ru, fw) + m.T.apply(rw, fu) +
                               lambda * m.V.mul.apply(fu, fw);
                Coords d = m.base.mul.apply(ru, rw) - r.apply(inner);
                for (std::size_t k = 0; k < n; ++k)
                    b.at({u, w, k}) = d[k];
            }
        out.push_back(std::move(b).done());
    }

    return out;
}

} // namespace

ModuleHomPoisson self_module(const HomPoissonAlgebra& p) {
    return {p, p, ActionTensor::left_regular(p.bracket), ActionTensor::left_regular(p.mul)};
}

ResidualSet check_l_hom_lie_algebra(const HomLieAlgebra& l, const HomLieAlgebra& lp,
                                    const ActionTensor& rho) {
    std::size_t n = l.dim;
    std::size_t v = lp.dim;
    require_action(rho, n, v, "rho");

    ResidualSet out;
    absorb(out, "L", check_hom_lie(l));
    absorb(out, "Lprime", check_hom_lie(lp));
    absorb(out, "", check_lie_rep(l, rho, lp.alpha));

    ResidualBuilder b("lhla.derivation", {n, v, v, v});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < v; ++u)
            for (std::size_t w = 0; w < v; ++w) {
                Coords ex = basis_vector(n, x), fu = basis_vector(v, u), fw = basis_vector(v, w);
                Coords d = rho.apply(ex, lp.bracket.apply(fu, fw)) -
                           lp.bracket.apply(rho.apply(ex, fu), fw) -
                           lp.bracket.apply(fu, rho.apply(ex, fw));
                for (std::size_t k = 0; k < v; ++k)
                    b.at({x, u, w, k}) = d[k];
            }
    out.push_back(std::move(b).done());
    return out;
}

ResidualSet check_module_hom_algebra(const HomAssocAlgebra& a, const HomAssocAlgebra& rg,
                                     const ActionTensor& mu) {
    std::size_t n = a.dim;
    std::size_t v = rg.dim;
    require_action(mu, n, v, "mu");

    ResidualSet out;
    absorb(out, "A", check_hom_associative(a, /*require_commutative=*/true));
    absorb(out, "carrier", check_hom_associative(rg, /*require_commutative=*/true));

    {
        // twisted multiplicativity, the form the left-regular action obeys
        ResidualBuilder b("mha.multiplicative", {n, n, v, v});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                LinearMap d =
                    mu.matrix(a.mul.apply(basis_vector(n, x), basis_vector(n, y))) * rg.alpha -
                    mu.matrix(a.alpha.column(x)) * mu.matrix(basis_vector(n, y));
                for (std::size_t i = 0; i < v; ++i)
                    for (std::size_t j = 0; j < v; ++j)
                        b.at({x, y, i, j}) = d(i, j);
            }
        out.push_back(std::move(b).done());
    }
    {
        ResidualBuilder b("mha.action_product", {n, v, v, v});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t u = 0; u < v; ++u)
                for (std::size_t w = 0; w < v; ++w) {
                    Coords fu = basis_vector(v, u), fw = basis_vector(v, w);
                    Coords d = mu.apply(a.alpha.column(x), rg.mul.apply(fu, fw)) -
                               rg.mul.apply(mu.apply(basis_vector(n, x), fu), rg.alpha.column(w));
                    for (std::size_t k = 0; k < v; ++k)
                        b.at({x, u, w, k}) = d[k];
                }
        out.push_back(std::move(b).done());
    }
    {
        ResidualBuilder b("mha.beta_compat", {n, v, v});
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap d = rg.alpha * mu.matrix(basis_vector(n, x)) -
                          mu.matrix(a.alpha.column(x)) * rg.alpha;
            for (std::size_t i = 0; i < v; ++i)
                for (std::size_t j = 0; j < v; ++j)
                    b.at({x, i, j}) = d(i, j);
        }
        out.push_back(std::move(b).done());
    }

    return out;
}

ResidualSet check_module_hom_poisson(const ModuleHomPoisson& m) {
    std::size_t n = m.base.dim;
    std::size_t v = m.V.dim;
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");

    ResidualSet out;
    absorb(out, "V", check_hom_poisson(m.V));
    absorb(out, "lie_module", check_l_hom_lie_algebra(lie_part(m.base), lie_part(m.V), m.S));
    absorb(out, "assoc_module", check_module_hom_algebra(assoc_part(m.base), assoc_part(m.V), m.T));
    absorb(out, "module", check_poisson_module({m.base, v, m.V.alpha, m.S, m.T}));

    const auto& al = m.base.alpha;
    const auto& beta = m.V.alpha;

    {
        ResidualBuilder b("mhp.beta_s_compat", {n, v, v});
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap d = beta * m.S.matrix(basis_vector(n, x)) - m.S.matrix(al.column(x)) * beta;
            for (std::size_t i = 0; i < v; ++i)
                for (std::size_t j = 0; j < v; ++j)
                    b.at({x, i, j}) = d(i, j);
        }
        out.push_back(std::move(b).done());
    }
    {
        ResidualBuilder b("mhp.beta_t_compat", {n, v, v});
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap d = beta * m.T.matrix(basis_vector(n, x)) - m.T.matrix(al.column(x)) * beta;
            for (std::size_t i = 0; i < v; ++i)
                for (std::size_t j = 0; j < v; ++j)
                    b.at({x, i, j}) = d(i, j);
        }
        out.push_back(std::move(b).done());
    }
    {
        // S(alpha(x))(u v) = (S(x)u) beta(v) + beta(u) (S(x)v)
        ResidualBuilder b("mhp.s_derivation_product", {n, v, v, v});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t u = 0; u < v; ++u)
                for (std::size_t w = 0; w < v; ++w) {
                    Coords fu = basis_vector(v, u), fw = basis_vector(v, w);
                    Coords ex = basis_vector(n, x);
                    Coords d = m.S.apply(al.column(x), m.V.mul.apply(fu, fw)) -
                               m.V.mul.apply(m.S.apply(ex, fu), beta.column(w)) -
                               m.V.mul.apply(beta.column(u), m.S.apply(ex, fw));
                    for (std::size_t k = 0; k < v; ++k)
                        b.at({x, u, w, k}) = d[k];
                }
        out.push_back(std::move(b).done());
    }
    {
        // [beta(u), T(x)v] = -(S(x)u) beta(v) + T(alpha(x))[u,v]
        ResidualBuilder b("mhp.bracket_t_mixed", {n, v, v, v});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t u = 0; u < v; ++u)
                for (std::size_t w = 0; w < v; ++w) {
                    Coords fu = basis_vector(v, u), fw = basis_vector(v, w);
                    Coords ex = basis_vector(n, x);
                    Coords d = m.V.bracket.apply(beta.column(u), m.T.apply(ex, fw)) +
                               m.V.mul.apply(m.S.apply(ex, fu), beta.column(w)) -
                               m.T.apply(al.column(x), m.V.bracket.apply(fu, fw));
                    for (std::size_t k = 0; k < v; ++k)
                        b.at({x, u, w, k}) = d[k];
                }
        out.push_back(std::move(b).done());
    }

    return out;
}

HomPoissonAlgebra module_semidirect(const ModuleHomPoisson& m) {
    std::size_t n = m.base.dim;
    std::size_t v = m.V.dim;
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");

    HomPoissonAlgebra out;
    out.dim = n + v;
    out.alpha = direct_sum(m.base.alpha, m.V.alpha);
    out.mul = StructureTensor(n + v);
    out.bracket = StructureTensor(n + v);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.mul(i, j, k) = m.base.mul(i, j, k);
                out.bracket(i, j, k) = m.base.bracket(i, j, k);
            }
    for (std::size_t u = 0; u < v; ++u)
        for (std::size_t w = 0; w < v; ++w)
            for (std::size_t z = 0; z < v; ++z) {
                out.mul(n + u, n + w, n + z) = m.V.mul(u, w, z);
                out.bracket(n + u, n + w, n + z) = m.V.bracket(u, w, z);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < v; ++u)
            for (std::size_t w = 0; w < v; ++w) {
                out.bracket(x, n + u, n + w) = m.S(x, u, w);
                out.bracket(n + u, x, n + w) = -m.S(x, u, w);
                out.mul(x, n + u, n + w) = m.T(x, u, w);
                out.mul(n + u, x, n + w) = m.T(x, u, w);
            }
    return out;
}

ResidualSet check_post_hom_lie(const StructureTensor& lie, const StructureTensor& diamond,
                               const LinearMap& alpha) {
    std::size_t n = lie.dim();
    require_dim(diamond, n, "diamond");
    if (alpha.rows() != n || alpha.cols() != n)
        throw shape_error("alpha has wrong shape", "alpha");

    ResidualSet out;

    out.push_back(pair_residual("post_lie.antisymmetry", n, [&](std::size_t i, std::size_t j) {
        return lie.apply(basis_vector(n, i), basis_vector(n, j)) +
               lie.apply(basis_vector(n, j), basis_vector(n, i));
    }));

    out.push_back(twist_morphism_residual("post_lie.twist_bracket_morphism", lie, alpha));
    out.push_back(twist_morphism_residual("post_lie.twist_diamond_morphism", diamond, alpha));

    out.push_back(triple_residual("post_lie.jacobi", n, [&](std::size_t x, std::size_t y, std::size_t z) {
        auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
            return lie.apply(lie.apply(basis_vector(n, a), basis_vector(n, b)), alpha.column(c));
        };
        return term(x, y, z) + term(z, x, y) + term(y, z, x);
    }));

    // alpha(z)<>(y<>x) - alpha(y)<>(z<>x) + (y<>z)<>alpha(x)
    //   - (z<>y)<>alpha(x) + [y,z]<>alpha(x)
    out.push_back(triple_residual("post_lie.diamond_compat", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords ex = basis_vector(n, x), ey = basis_vector(n, y), ez = basis_vector(n, z);
        Coords d = diamond.apply(alpha.column(z), diamond.apply(ey, ex));
        d = d - diamond.apply(alpha.column(y), diamond.apply(ez, ex));
        d = d + diamond.apply(diamond.apply(ey, ez), alpha.column(x));
        d = d - diamond.apply(diamond.apply(ez, ey), alpha.column(x));
        d = d + diamond.apply(lie.apply(ey, ez), alpha.column(x));
        return d;
    }));

    // alpha(z)<>[x,y] - [z<>x, alpha(y)] - [alpha(x), z<>y]
    out.push_back(triple_residual("post_lie.diamond_bracket", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords ex = basis_vector(n, x), ey = basis_vector(n, y), ez = basis_vector(n, z);
        Coords d = diamond.apply(alpha.column(z), lie.apply(ex, ey));
        d = d - lie.apply(diamond.apply(ez, ex), alpha.column(y));
        d = d - lie.apply(alpha.column(x), diamond.apply(ez, ey));
        return d;
    }));

    return out;
}

ResidualSet check_comm_dendriform(const StructureTensor& dot, const StructureTensor& succ,
                                  const LinearMap& alpha) {
    std::size_t n = dot.dim();
    require_dim(succ, n, "succ");
    if (alpha.rows() != n || alpha.cols() != n)
        throw shape_error("alpha has wrong shape", "alpha");

    ResidualSet out;

    out.push_back(pair_residual("dendriform.dot_commutativity", n, [&](std::size_t i, std::size_t j) {
        return dot.apply(basis_vector(n, i), basis_vector(n, j)) -
               dot.apply(basis_vector(n, j), basis_vector(n, i));
    }));

    out.push_back(twist_morphism_residual("dendriform.twist_dot_morphism", dot, alpha));
    out.push_back(twist_morphism_residual("dendriform.twist_succ_morphism", succ, alpha));

    out.push_back(triple_residual("dendriform.dot_hom_associativity", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords ex = basis_vector(n, x), ey = basis_vector(n, y), ez = basis_vector(n, z);
        return dot.apply(dot.apply(ex, ey), alpha.column(z)) -
               dot.apply(alpha.column(x), dot.apply(ey, ez));
    }));

    // (x>y + y>x + x.y) > alpha(z) = alpha(x) > (y>z)
    out.push_back(triple_residual("dendriform.succ_hom_associativity", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords ex = basis_vector(n, x), ey = basis_vector(n, y), ez = basis_vector(n, z);
        Coords sum = succ.apply(ex, ey) + succ.apply(ey, ex) + dot.apply(ex, ey);
        return succ.apply(sum, alpha.column(z)) - succ.apply(alpha.column(x), succ.apply(ey, ez));
    }));

    // (x>y).alpha(z) = alpha(x) > (y.z)
    out.push_back(triple_residual("dendriform.succ_dot", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords ex = basis_vector(n, x), ey = basis_vector(n, y), ez = basis_vector(n, z);
        return dot.apply(succ.apply(ex, ey), alpha.column(z)) -
               succ.apply(alpha.column(x), dot.apply(ey, ez));
    }));

    return out;
}

ResidualSet check_post_hom_poisson(const PostHomPoisson& p) {
    std::size_t n = p.dim;
    require_dim(p.lie, n, "lie");
    require_dim(p.diamond, n, "diamond");
    require_dim(p.dot, n, "dot");
    require_dim(p.succ, n, "succ");

    ResidualSet out;
    absorb(out, "", check_post_hom_lie(p.lie, p.diamond, p.alpha));
    absorb(out, "", check_comm_dendriform(p.dot, p.succ, p.alpha));

    const auto& al = p.alpha;
    auto ex = [&](std::size_t i) { return basis_vector(n, i); };

    // [alpha(x), y.z] = [x,y].alpha(z) + alpha(y).[x,z]
    out.push_back(triple_residual("post.bracket_dot", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords d = p.lie.apply(al.column(x), p.dot.apply(ex(y), ex(z)));
        d = d - p.dot.apply(p.lie.apply(ex(x), ex(y)), al.column(z));
        d = d - p.dot.apply(al.column(y), p.lie.apply(ex(x), ex(z)));
        return d;
    }));

    // [alpha(x), z>y] = alpha(z)>[x,y] - alpha(y).(z<>x)
    out.push_back(triple_residual("post.bracket_succ", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords d = p.lie.apply(al.column(x), p.succ.apply(ex(z), ex(y)));
        d = d - p.succ.apply(al.column(z), p.lie.apply(ex(x), ex(y)));
        d = d + p.dot.apply(al.column(y), p.diamond.apply(ex(z), ex(x)));
        return d;
    }));

    // alpha(x)<>(y.z) = (x<>y).alpha(z) + alpha(y).(x<>z)
    out.push_back(triple_residual("post.diamond_dot", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords d = p.diamond.apply(al.column(x), p.dot.apply(ex(y), ex(z)));
        d = d - p.dot.apply(p.diamond.apply(ex(x), ex(y)), al.column(z));
        d = d - p.dot.apply(al.column(y), p.diamond.apply(ex(x), ex(z)));
        return d;
    }));

    // (y>z + z>y + y.z)<>alpha(x) = alpha(z)>(y<>x) + alpha(y)>(z<>x)
    out.push_back(triple_residual("post.circ_diamond", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords circ = p.succ.apply(ex(y), ex(z)) + p.succ.apply(ex(z), ex(y)) +
                      p.dot.apply(ex(y), ex(z));
        Coords d = p.diamond.apply(circ, al.column(x));
        d = d - p.succ.apply(al.column(z), p.diamond.apply(ex(y), ex(x)));
        d = d - p.succ.apply(al.column(y), p.diamond.apply(ex(z), ex(x)));
        return d;
    }));

    // alpha(x)<>(z>y) = alpha(z)>(x<>y) + (x<>z - z<>x + [x,z])>alpha(y)
    out.push_back(triple_residual("post.diamond_succ", n,
                                  [&](std::size_t x, std::size_t y, std::size_t z) {
        Coords d = p.diamond.apply(al.column(x), p.succ.apply(ex(z), ex(y)));
        d = d - p.succ.apply(al.column(z), p.diamond.apply(ex(x), ex(y)));
        Coords mix = p.diamond.apply(ex(x), ex(z)) - p.diamond.apply(ex(z), ex(x)) +
                     p.lie.apply(ex(x), ex(z));
        d = d - p.succ.apply(mix, al.column(y));
        return d;
    }));

    return out;
}

HomPoissonAlgebra associated_hom_poisson(const PostHomPoisson& p) {
    std::size_t n = p.dim;
    HomPoissonAlgebra out;
    out.dim = n;
    out.alpha = p.alpha;
    out.mul = StructureTensor(n);
    out.bracket = StructureTensor(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.bracket(i, j, k) = p.diamond(i, j, k) - p.diamond(j, i, k) + p.lie(i, j, k);
                out.mul(i, j, k) = p.succ(i, j, k) + p.succ(j, i, k) + p.dot(i, j, k);
            }
    return out;
}

ResidualSet check_o_operator(const OOperator& o) {
    if (!all_zero(check_module_hom_poisson(o.module)))
        throw precondition_error("InvalidModule",
                                 "operator checked against an invalid module");
    return o_operator_residuals(o.module, o.R, o.weight);
}

ResidualSet check_rota_baxter(const HomPoissonAlgebra& p, const LinearMap& r, const Rational& lambda) {
    return o_operator_residuals(self_module(p), r, lambda);
}

PostHomPoisson post_from_o_operator(const OOperator& o) {
    if (!all_zero(check_o_operator(o)))
        throw precondition_error("InvalidOOperator",
                                 "operator does not satisfy the weighted identities");
    std::size_t n = o.module.base.dim;
    std::size_t v = o.module.V.dim;

    PostHomPoisson out;
    out.dim = v;
    out.alpha = o.module.V.alpha;
    out.lie = o.module.V.bracket.scaled(o.weight);
    out.dot = o.module.V.mul.scaled(o.weight);
    out.diamond = StructureTensor(v);
    out.succ = StructureTensor(v);
    for (std::size_t u = 0; u < v; ++u)
        for (std::size_t w = 0; w < v; ++w)
            for (std::size_t z = 0; z < v; ++z) {
                Rational dia(0), suc(0);
                for (std::size_t i = 0; i < n; ++i) {
                    if (o.R(i, u).is_zero())
                        continue;
                    dia += o.R(i, u) * o.module.S(i, w, z);
                    suc += o.R(i, u) * o.module.T(i, w, z);
                }
                out.diamond(u, w, z) = dia;
                out.succ(u, w, z) = suc;
            }
    return out;
}

std::pair<RTensor, RTensor> symmetric_parts(const RTensor& r) {
    RTensor tau = flip_tau(r);
    Rational half(1, 2);
    return {(r - tau).scaled(half), (r + tau).scaled(half)};
}

ResidualSet check_quasitriangular(const HomPoissonBialgebra& b, const RTensor& r,
                                  HaybeVariant variant) {
    std::size_t n = b.P.dim;
    if (r.dim() != n)
        throw shape_error("r has wrong shape", "r");
    if (b.delta != coboundary_delta(b.P, r) || b.Delta != coboundary_Delta(b.P, r))
        throw precondition_error("CoalgebraMismatch",
                                 "comultiplications are not the coboundary ones of r");

    ResidualSet out;
    {
        Tensor3 c = chybe_residual(lie_part(b.P), r);
        ResidualBuilder rb("quasitriangular.chybe", {n, n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    rb.at({i, j, k}) = c(i, j, k);
        out.push_back(std::move(rb).done());
    }
    {
        Tensor3 a = haybe_residual(assoc_part(b.P), r);
        ResidualBuilder rb("quasitriangular.haybe", {n, n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    rb.at({i, j, k}) = a(i, j, k);
        out.push_back(std::move(rb).done());
    }
    absorb(out, "", check_coboundary_conditions(b.P, r, variant));
    return out;
}

std::pair<ModuleHomPoisson, OOperator> quasitriangular_dual_module(const HomPoissonBialgebra& b,
                                                                   const RTensor& r) {
    if (!all_zero(check_quasitriangular(b, r)))
        throw precondition_error("NotQuasitriangular",
                                 "r does not solve both Yang-Baxter equations");
    std::size_t n = b.P.dim;
    auto [phi, psi] = symmetric_parts(r);
    (void)phi;
    LinearMap psi_map = psi.as_map();

    ActionTensor adstar = dual_action(ActionTensor::left_regular(b.P.bracket));
    ActionTensor lstar = dual_action(ActionTensor::left_regular(b.P.mul));

    HomPoissonAlgebra dual;
    dual.dim = n;
    dual.alpha = dual_map(b.P.alpha);
    dual.bracket = StructureTensor(n);
    dual.mul = StructureTensor(n);
    Rational two(2);
    for (std::size_t u = 0; u < n; ++u) {
        LinearMap ad_psi = adstar.matrix(psi_map.column(u));
        LinearMap l_psi = lstar.matrix(psi_map.column(u));
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t z = 0; z < n; ++z) {
                dual.bracket(u, w, z) = -two * ad_psi(z, w);
                dual.mul(u, w, z) = two * l_psi(z, w);
            }
    }

    ModuleHomPoisson module{b.P, dual, adstar, -lstar};
    OOperator op{r.as_map(), Rational(1), module};
    return {module, op};
}

PostHomPoisson post_from_quasitriangular(const HomPoissonBialgebra& b, const RTensor& r) {
    if (!all_zero(check_quasitriangular(b, r)))
        throw precondition_error("NotQuasitriangular",
                                 "r does not solve both Yang-Baxter equations");
    std::size_t n = b.P.dim;
    auto [phi, psi] = symmetric_parts(r);
    (void)phi;
    LinearMap psi_map = psi.as_map();
    LinearMap r_map = r.as_map();

    ActionTensor adstar = dual_action(ActionTensor::left_regular(b.P.bracket));
    ActionTensor lstar = dual_action(ActionTensor::left_regular(b.P.mul));

    PostHomPoisson out;
    out.dim = n;
    out.alpha = dual_map(b.P.alpha);
    out.lie = StructureTensor(n);
    out.diamond = StructureTensor(n);
    out.dot = StructureTensor(n);
    out.succ = StructureTensor(n);
    Rational two(2);
    for (std::size_t u = 0; u < n; ++u) {
        LinearMap ad_psi = adstar.matrix(psi_map.column(u));
        LinearMap l_psi = lstar.matrix(psi_map.column(u));
        LinearMap ad_r = adstar.matrix(r_map.column(u));
        LinearMap l_r = lstar.matrix(r_map.column(u));
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t z = 0; z < n; ++z) {
                out.lie(u, w, z) = -two * ad_psi(z, w);
                out.diamond(u, w, z) = ad_r(z, w);
                out.dot(u, w, z) = two * l_psi(z, w);
                out.succ(u, w, z) = -l_r(z, w);
            }
    }
    return out;
}

} // namespace homps
