#include "homps/modules.hpp"

#include <functional>

namespace homps {

namespace {

void require_action(const ActionTensor& s, std::size_t adim, std::size_t vdim, const char* what) {
    if (s.adim() != adim || s.vdim() != vdim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

// Residual of a matrix identity quantified over one basis index.
Residual matrix_residual(const std::string& label, std::size_t n, std::size_t vdim,
                         const std::function<LinearMap(std::size_t)>& lhs_minus_rhs) {
    ResidualBuilder b(label, {n, vdim, vdim});
    for (std::size_t x = 0; x < n; ++x) {
        LinearMap d = lhs_minus_rhs(x);
        for (std::size_t i = 0; i < vdim; ++i)
            for (std::size_t j = 0; j < vdim; ++j)
                b.at({x, i, j}) = d(i, j);
    }
    return std::move(b).done();
}

Residual matrix_pair_residual(const std::string& label, std::size_t n, std::size_t vdim,
                              const std::function<LinearMap(std::size_t, std::size_t)>& lhs_minus_rhs) {
    ResidualBuilder b(label, {n, n, vdim, vdim});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            LinearMap d = lhs_minus_rhs(x, y);
            for (std::size_t i = 0; i < vdim; ++i)
                for (std::size_t j = 0; j < vdim; ++j)
                    b.at({x, y, i, j}) = d(i, j);
        }
    return std::move(b).done();
}

} // namespace

PoissonModule adjoint_module(const HomPoissonAlgebra& p) {
    return {p, p.dim, p.alpha, ActionTensor::left_regular(p.bracket),
            ActionTensor::left_regular(p.mul)};
}

PoissonModule coadjoint_module(const HomPoissonAlgebra& p) {
    return {p, p.dim, dual_map(p.alpha),
            dual_action(ActionTensor::left_regular(p.bracket)),
            -dual_action(ActionTensor::left_regular(p.mul))};
}

ResidualSet check_lie_rep(const HomLieAlgebra& l, const ActionTensor& rho, const LinearMap& beta) {
    std::size_t n = l.dim;
    std::size_t m = rho.vdim();
    require_action(rho, n, m, "rho");
    if (beta.rows() != m || beta.cols() != m)
        throw shape_error("beta has wrong shape", "beta");

    auto R = [&](std::size_t x) { return rho.matrix(basis_vector(n, x)); };
    auto Ra = [&](std::size_t x) { return rho.matrix(l.alpha.column(x)); };

    ResidualSet out;
    out.push_back(matrix_residual("lie_rep.beta_compat", n, m, [&](std::size_t x) {
        return beta * R(x) - Ra(x) * beta;
    }));
    out.push_back(matrix_pair_residual("lie_rep.bracket", n, m, [&](std::size_t x, std::size_t y) {
        Coords bxy = l.bracket.apply(basis_vector(n, x), basis_vector(n, y));
        return rho.matrix(bxy) * beta - (Ra(x) * R(y) - Ra(y) * R(x));
    }));
    return out;
}

Residual check_assoc_rep(const HomAssocAlgebra& a, const ActionTensor& mu, const LinearMap& nu) {
    std::size_t n = a.dim;
    std::size_t m = mu.vdim();
    require_action(mu, n, m, "mu");
    if (nu.rows() != m || nu.cols() != m)
        throw shape_error("nu has wrong shape", "nu");

    return matrix_pair_residual("assoc_rep.product", n, m, [&](std::size_t x, std::size_t y) {
        Coords xy = a.mul.apply(basis_vector(n, x), basis_vector(n, y));
        return mu.matrix(xy) * nu - mu.matrix(a.alpha.column(x)) * mu.matrix(basis_vector(n, y));
    });
}

ResidualSet check_poisson_module(const PoissonModule& m) {
    std::size_t n = m.base.dim;
    std::size_t v = m.vdim;
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");
    if (m.beta.rows() != v || m.beta.cols() != v)
        throw shape_error("beta has wrong shape", "beta");

    ResidualSet out;
    absorb(out, "base", check_hom_poisson(m.base));
    absorb(out, "", check_lie_rep(lie_part(m.base), m.S, m.beta));
    absorb(out, "", ResidualSet{check_assoc_rep(assoc_part(m.base), m.T, m.beta)});

    auto S = [&](std::size_t x) { return m.S.matrix(basis_vector(n, x)); };
    auto T = [&](std::size_t x) { return m.T.matrix(basis_vector(n, x)); };
    auto Sa = [&](std::size_t x) { return m.S.matrix(m.base.alpha.column(x)); };
    auto Ta = [&](std::size_t x) { return m.T.matrix(m.base.alpha.column(x)); };

    out.push_back(matrix_residual("module.beta_s_compat", n, v, [&](std::size_t x) {
        return m.beta * S(x) - Sa(x) * m.beta;
    }));
    out.push_back(matrix_residual("module.beta_t_compat", n, v, [&](std::size_t x) {
        return m.beta * T(x) - Ta(x) * m.beta;
    }));
    out.push_back(matrix_pair_residual("module.s_product", n, v, [&](std::size_t x, std::size_t y) {
        Coords xy = m.base.mul.apply(basis_vector(n, x), basis_vector(n, y));
        return m.S.matrix(xy) * m.beta - (Ta(y) * S(x) + Ta(x) * S(y));
    }));
    out.push_back(matrix_pair_residual("module.t_bracket", n, v, [&](std::size_t x, std::size_t y) {
        Coords bxy = m.base.bracket.apply(basis_vector(n, x), basis_vector(n, y));
        return m.T.matrix(bxy) * m.beta - (Sa(x) * T(y) - Ta(y) * S(x));
    }));

    return out;
}

HomPoissonAlgebra semidirect_product(const PoissonModule& m) {
    std::size_t n = m.base.dim;
    std::size_t v = m.vdim;
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");

    HomPoissonAlgebra out;
    out.dim = n + v;
    out.alpha = direct_sum(m.base.alpha, m.beta);
    out.mul = StructureTensor(n + v);
    out.bracket = StructureTensor(n + v);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.mul(i, j, k) = m.base.mul(i, j, k);
                out.bracket(i, j, k) = m.base.bracket(i, j, k);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < v; ++u)
            for (std::size_t w = 0; w < v; ++w) {
                // {e_x, f_u} = S(x)u, (e_x)(f_u) = T(x)u, and symmetrically.
                out.bracket(x, n + u, n + w) = m.S(x, u, w);
                out.bracket(n + u, x, n + w) = -m.S(x, u, w);
                out.mul(x, n + u, n + w) = m.T(x, u, w);
                out.mul(n + u, x, n + w) = m.T(x, u, w);
            }
    return out;
}

ResidualSet dual_module_hypotheses(const PoissonModule& m) {
    std::size_t n = m.base.dim;
    std::size_t v = m.vdim;
    require_action(m.S, n, v, "S");
    require_action(m.T, n, v, "T");

    auto S = [&](std::size_t x) { return m.S.matrix(basis_vector(n, x)); };
    auto T = [&](std::size_t x) { return m.T.matrix(basis_vector(n, x)); };
    auto Sa = [&](std::size_t x) { return m.S.matrix(m.base.alpha.column(x)); };
    auto Ta = [&](std::size_t x) { return m.T.matrix(m.base.alpha.column(x)); };

    ResidualSet out;
    out.push_back(matrix_residual("dualizable.s_twist_swap", n, v, [&](std::size_t x) {
        return m.beta * Sa(x) - S(x) * m.beta;
    }));
    out.push_back(matrix_residual("dualizable.t_beta_commute", n, v, [&](std::size_t x) {
        return m.beta * T(x) - T(x) * m.beta;
    }));
    out.push_back(matrix_pair_residual("dualizable.s_product", n, v, [&](std::size_t x, std::size_t y) {
        Coords xy = m.base.mul.apply(basis_vector(n, x), basis_vector(n, y));
        return m.S.matrix(xy) * m.beta - (S(x) * Ta(y) + S(y) * Ta(x));
    }));
    out.push_back(matrix_pair_residual("dualizable.t_bracket", n, v, [&](std::size_t x, std::size_t y) {
        Coords bxy = m.base.bracket.apply(basis_vector(n, x), basis_vector(n, y));
        return m.T.matrix(bxy) * m.beta - (T(y) * Sa(x) - S(x) * Ta(y));
    }));
    return out;
}

PoissonModule dual_module(const PoissonModule& m) {
    ResidualSet hyp = dual_module_hypotheses(m);
    if (const Residual* bad = first_failing(hyp)) {
        auto w = bad->witness();
        std::string msg = "dual module hypothesis failed: " + bad->label;
        if (w) {
            msg += " at (";
            for (std::size_t i = 0; i < w->size(); ++i)
                msg += (i ? "," : "") + std::to_string((*w)[i]);
            msg += ")";
        }
        throw precondition_error("HypothesisViolated", msg);
    }
    return {m.base, m.vdim, dual_map(m.beta), dual_action(m.S), -dual_action(m.T)};
}

} // namespace homps
