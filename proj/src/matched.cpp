#include "homps/matched.hpp"

#include <algorithm>
#include <functional>

namespace homps {

namespace {

void require_action(const ActionTensor& s, std::size_t adim, std::size_t vdim, const char* what) {
    if (s.adim() != adim || s.vdim() != vdim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

// Residual of an identity quantified over one index of A and a pair of V,
// with values in V.
Residual one_two_residual(const std::string& label, std::size_t adim, std::size_t vdim,
                          const std::function<Coords(std::size_t, std::size_t, std::size_t)>& f) {
    ResidualBuilder b(label, {adim, vdim, vdim, vdim});
    for (std::size_t x = 0; x < adim; ++x)
        for (std::size_t u = 0; u < vdim; ++u)
            for (std::size_t v = 0; v < vdim; ++v) {
                Coords d = f(x, u, v);
                for (std::size_t k = 0; k < vdim; ++k)
                    b.at({x, u, v, k}) = d[k];
            }
    return std::move(b).done();
}

} // namespace

ResidualSet check_matched_pair_lie(const MatchedPairLie& mp) {
    std::size_t n1 = mp.L1.dim;
    std::size_t n2 = mp.L2.dim;
    require_action(mp.rho1, n1, n2, "rho1");
    require_action(mp.rho2, n2, n1, "rho2");

    ResidualSet out;
    absorb(out, "L1", check_hom_lie(mp.L1));
    absorb(out, "L2", check_hom_lie(mp.L2));
    absorb(out, "rho1", check_lie_rep(mp.L1, mp.rho1, mp.L2.alpha));
    absorb(out, "rho2", check_lie_rep(mp.L2, mp.rho2, mp.L1.alpha));

    const auto& a1 = mp.L1.alpha;
    const auto& a2 = mp.L2.alpha;
    const auto& br1 = mp.L1.bracket;
    const auto& br2 = mp.L2.bracket;

    // rho1(a1(x))[a,b] - [rho1(x)a, a2(b)] - [a2(a), rho1(x)b]
    //   + rho1(rho2(a)x)a2(b) - rho1(rho2(b)x)a2(a)
    out.push_back(one_two_residual("mp_lie.compat1", n1, n2, [&](std::size_t x, std::size_t a, std::size_t b) {
        Coords ex = basis_vector(n1, x), fa = basis_vector(n2, a), fb = basis_vector(n2, b);
        Coords lhs = mp.rho1.apply(a1.column(x), br2.apply(fa, fb));
        lhs = lhs - br2.apply(mp.rho1.apply(ex, fa), a2.column(b));
        lhs = lhs - br2.apply(a2.column(a), mp.rho1.apply(ex, fb));
        lhs = lhs + mp.rho1.apply(mp.rho2.apply(fa, ex), a2.column(b));
        lhs = lhs - mp.rho1.apply(mp.rho2.apply(fb, ex), a2.column(a));
        return lhs;
    }));

    out.push_back(one_two_residual("mp_lie.compat2", n2, n1, [&](std::size_t a, std::size_t x, std::size_t y) {
        Coords fa = basis_vector(n2, a), ex = basis_vector(n1, x), ey = basis_vector(n1, y);
        Coords lhs = mp.rho2.apply(a2.column(a), br1.apply(ex, ey));
        lhs = lhs - br1.apply(mp.rho2.apply(fa, ex), a1.column(y));
        lhs = lhs - br1.apply(a1.column(x), mp.rho2.apply(fa, ey));
        lhs = lhs + mp.rho2.apply(mp.rho1.apply(ex, fa), a1.column(y));
        lhs = lhs - mp.rho2.apply(mp.rho1.apply(ey, fa), a1.column(x));
        return lhs;
    }));

    return out;
}

HomLieAlgebra bowtie_lie(const MatchedPairLie& mp) {
    std::size_t n1 = mp.L1.dim;
    std::size_t n2 = mp.L2.dim;
    require_action(mp.rho1, n1, n2, "rho1");
    require_action(mp.rho2, n2, n1, "rho2");

    HomLieAlgebra out;
    out.dim = n1 + n2;
    out.alpha = direct_sum(mp.L1.alpha, mp.L2.alpha);
    out.bracket = StructureTensor(n1 + n2);

    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k)
                out.bracket(i, j, k) = mp.L1.bracket(i, j, k);
    for (std::size_t u = 0; u < n2; ++u)
        for (std::size_t v = 0; v < n2; ++v)
            for (std::size_t w = 0; w < n2; ++w)
                out.bracket(n1 + u, n1 + v, n1 + w) = mp.L2.bracket(u, v, w);
    // [x, a] = rho1(x)a - rho2(a)x
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t u = 0; u < n2; ++u) {
            for (std::size_t w = 0; w < n2; ++w) {
                out.bracket(i, n1 + u, n1 + w) = mp.rho1(i, u, w);
                out.bracket(n1 + u, i, n1 + w) = -mp.rho1(i, u, w);
            }
            for (std::size_t k = 0; k < n1; ++k) {
                out.bracket(i, n1 + u, k) = -mp.rho2(u, i, k);
                out.bracket(n1 + u, i, k) = mp.rho2(u, i, k);
            }
        }
    return out;
}

ResidualSet check_matched_pair_assoc(const MatchedPairAssoc& mp) {
    std::size_t n1 = mp.A1.dim;
    std::size_t n2 = mp.A2.dim;
    require_action(mp.mu1, n1, n2, "mu1");
    require_action(mp.mu2, n2, n1, "mu2");

    ResidualSet out;
    absorb(out, "A1", check_hom_associative(mp.A1, /*require_commutative=*/true));
    absorb(out, "A2", check_hom_associative(mp.A2, /*require_commutative=*/true));
    absorb(out, "mu1", ResidualSet{check_assoc_rep(mp.A1, mp.mu1, mp.A2.alpha)});
    absorb(out, "mu2", ResidualSet{check_assoc_rep(mp.A2, mp.mu2, mp.A1.alpha)});

    const auto& b1 = mp.A1.alpha;
    const auto& b2 = mp.A2.alpha;
    const auto& m1 = mp.A1.mul;
    const auto& m2 = mp.A2.mul;

    {
        ResidualBuilder b("mp_assoc.twist_compat1", {n1, n2, n2});
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t a = 0; a < n2; ++a) {
                Coords d = b2.apply(mp.mu1.apply(basis_vector(n1, x), basis_vector(n2, a))) -
                           mp.mu1.apply(b1.column(x), b2.column(a));
                for (std::size_t k = 0; k < n2; ++k)
                    b.at({x, a, k}) = d[k];
            }
        out.push_back(std::move(b).done());
    }
    {
        ResidualBuilder b("mp_assoc.twist_compat2", {n2, n1, n1});
        for (std::size_t a = 0; a < n2; ++a)
            for (std::size_t x = 0; x < n1; ++x) {
                Coords d = b1.apply(mp.mu2.apply(basis_vector(n2, a), basis_vector(n1, x))) -
                           mp.mu2.apply(b2.column(a), b1.column(x));
                for (std::size_t k = 0; k < n1; ++k)
                    b.at({a, x, k}) = d[k];
            }
        out.push_back(std::move(b).done());
    }

    // mu1(b1(x))(a b) - (mu1(x)a) b2(b) - mu1(mu2(a)x) b2(b)
    out.push_back(one_two_residual("mp_assoc.action1_product", n1, n2,
                                   [&](std::size_t x, std::size_t a, std::size_t b) {
        Coords ex = basis_vector(n1, x), fa = basis_vector(n2, a), fb = basis_vector(n2, b);
        Coords lhs = mp.mu1.apply(b1.column(x), m2.apply(fa, fb));
        lhs = lhs - m2.apply(mp.mu1.apply(ex, fa), b2.column(b));
        lhs = lhs - mp.mu1.apply(mp.mu2.apply(fa, ex), b2.column(b));
        return lhs;
    }));

    out.push_back(one_two_residual("mp_assoc.action2_product", n2, n1,
                                   [&](std::size_t a, std::size_t x, std::size_t y) {
        Coords fa = basis_vector(n2, a), ex = basis_vector(n1, x), ey = basis_vector(n1, y);
        Coords lhs = mp.mu2.apply(b2.column(a), m1.apply(ex, ey));
        lhs = lhs - m1.apply(mp.mu2.apply(fa, ex), b1.column(y));
        lhs = lhs - mp.mu2.apply(mp.mu1.apply(ex, fa), b1.column(y));
        return lhs;
    }));

    return out;
}

HomAssocAlgebra bowtie_assoc(const MatchedPairAssoc& mp) {
    std::size_t n1 = mp.A1.dim;
    std::size_t n2 = mp.A2.dim;
    require_action(mp.mu1, n1, n2, "mu1");
    require_action(mp.mu2, n2, n1, "mu2");

    HomAssocAlgebra out;
    out.dim = n1 + n2;
    out.alpha = direct_sum(mp.A1.alpha, mp.A2.alpha);
    out.mul = StructureTensor(n1 + n2);

    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k)
                out.mul(i, j, k) = mp.A1.mul(i, j, k);
    for (std::size_t u = 0; u < n2; ++u)
        for (std::size_t v = 0; v < n2; ++v)
            for (std::size_t w = 0; w < n2; ++w)
                out.mul(n1 + u, n1 + v, n1 + w) = mp.A2.mul(u, v, w);
    // x a = a x = mu1(x)a + mu2(a)x
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t u = 0; u < n2; ++u) {
            for (std::size_t w = 0; w < n2; ++w) {
                out.mul(i, n1 + u, n1 + w) = mp.mu1(i, u, w);
                out.mul(n1 + u, i, n1 + w) = mp.mu1(i, u, w);
            }
            for (std::size_t k = 0; k < n1; ++k) {
                out.mul(i, n1 + u, k) = mp.mu2(u, i, k);
                out.mul(n1 + u, i, k) = mp.mu2(u, i, k);
            }
        }
    return out;
}

ResidualSet check_matched_pair_poisson(const MatchedPairPoisson& mp) {
    std::size_t n1 = mp.P1.dim;
    std::size_t n2 = mp.P2.dim;
    require_action(mp.rho1, n1, n2, "rho1");
    require_action(mp.mu1, n1, n2, "mu1");
    require_action(mp.rho2, n2, n1, "rho2");
    require_action(mp.mu2, n2, n1, "mu2");

    ResidualSet out;
    absorb(out, "lie", check_matched_pair_lie({lie_part(mp.P1), lie_part(mp.P2), mp.rho1, mp.rho2}));
    absorb(out, "assoc", check_matched_pair_assoc({assoc_part(mp.P1), assoc_part(mp.P2), mp.mu1, mp.mu2}));
    absorb(out, "module12", check_poisson_module({mp.P1, n2, mp.P2.alpha, mp.rho1, mp.mu1}));
    absorb(out, "module21", check_poisson_module({mp.P2, n1, mp.P1.alpha, mp.rho2, mp.mu2}));

    const auto& a1 = mp.P1.alpha;
    const auto& a2 = mp.P2.alpha;
    const auto& m1 = mp.P1.mul;
    const auto& m2 = mp.P2.mul;
    const auto& br1 = mp.P1.bracket;
    const auto& br2 = mp.P2.bracket;

    // rho2(a2(a))(x y) - (rho2(a)x) a1(y) - a1(x)(rho2(a)y)
    //   + mu2(rho1(x)a) a1(y) + mu2(rho1(y)a) a1(x)
    out.push_back(one_two_residual("mp_poisson.bracket2_on_product1", n2, n1,
                                   [&](std::size_t a, std::size_t x, std::size_t y) {
        Coords fa = basis_vector(n2, a), ex = basis_vector(n1, x), ey = basis_vector(n1, y);
        Coords lhs = mp.rho2.apply(a2.column(a), m1.apply(ex, ey));
        lhs = lhs - m1.apply(mp.rho2.apply(fa, ex), a1.column(y));
        lhs = lhs - m1.apply(a1.column(x), mp.rho2.apply(fa, ey));
        lhs = lhs + mp.mu2.apply(mp.rho1.apply(ex, fa), a1.column(y));
        lhs = lhs + mp.mu2.apply(mp.rho1.apply(ey, fa), a1.column(x));
        return lhs;
    }));

    // {a1(x), mu2(a)y} - rho2(mu1(y)a) a1(x)
    //   - mu2(rho1(x)a) a1(y) + (rho2(a)x) a1(y) - mu2(a2(a))[x,y]
    {
        ResidualBuilder b("mp_poisson.mixed1", {n1, n2, n1, n1});
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t a = 0; a < n2; ++a)
                for (std::size_t y = 0; y < n1; ++y) {
                    Coords ex = basis_vector(n1, x), fa = basis_vector(n2, a), ey = basis_vector(n1, y);
                    Coords lhs = br1.apply(a1.column(x), mp.mu2.apply(fa, ey));
                    lhs = lhs - mp.rho2.apply(mp.mu1.apply(ey, fa), a1.column(x));
                    lhs = lhs - mp.mu2.apply(mp.rho1.apply(ex, fa), a1.column(y));
                    lhs = lhs + m1.apply(mp.rho2.apply(fa, ex), a1.column(y));
                    lhs = lhs - mp.mu2.apply(a2.column(a), br1.apply(ex, ey));
                    for (std::size_t k = 0; k < n1; ++k)
                        b.at({x, a, y, k}) = lhs[k];
                }
        out.push_back(std::move(b).done());
    }

    out.push_back(one_two_residual("mp_poisson.bracket1_on_product2", n1, n2,
                                   [&](std::size_t x, std::size_t a, std::size_t b) {
        Coords ex = basis_vector(n1, x), fa = basis_vector(n2, a), fb = basis_vector(n2, b);
        Coords lhs = mp.rho1.apply(a1.column(x), m2.apply(fa, fb));
        lhs = lhs - m2.apply(mp.rho1.apply(ex, fa), a2.column(b));
        lhs = lhs - m2.apply(a2.column(a), mp.rho1.apply(ex, fb));
        lhs = lhs + mp.mu1.apply(mp.rho2.apply(fa, ex), a2.column(b));
        lhs = lhs + mp.mu1.apply(mp.rho2.apply(fb, ex), a2.column(a));
        return lhs;
    }));

    {
        ResidualBuilder b("mp_poisson.mixed2", {n2, n1, n2, n2});
        for (std::size_t a = 0; a < n2; ++a)
            for (std::size_t x = 0; x < n1; ++x)
                for (std::size_t c = 0; c < n2; ++c) {
                    Coords fa = basis_vector(n2, a), ex = basis_vector(n1, x), fc = basis_vector(n2, c);
                    Coords lhs = br2.apply(a2.column(a), mp.mu1.apply(ex, fc));
                    lhs = lhs - mp.rho1.apply(mp.mu2.apply(fc, ex), a2.column(a));
                    lhs = lhs - mp.mu1.apply(mp.rho2.apply(fa, ex), a2.column(c));
                    lhs = lhs + m2.apply(mp.rho1.apply(ex, fa), a2.column(c));
                    lhs = lhs - mp.mu1.apply(a1.column(x), br2.apply(fa, fc));
                    for (std::size_t k = 0; k < n2; ++k)
                        b.at({a, x, c, k}) = lhs[k];
                }
        out.push_back(std::move(b).done());
    }

    return out;
}

HomPoissonAlgebra bowtie_poisson(const MatchedPairPoisson& mp) {
    HomLieAlgebra lie = bowtie_lie({lie_part(mp.P1), lie_part(mp.P2), mp.rho1, mp.rho2});
    HomAssocAlgebra assoc = bowtie_assoc({assoc_part(mp.P1), assoc_part(mp.P2), mp.mu1, mp.mu2});
    return {lie.dim, lie.alpha, assoc.mul, lie.bracket};
}

BilinearForm BilinearForm::hyperbolic(std::size_t half) {
    BilinearForm b;
    b.dim = 2 * half;
    b.gram = LinearMap(b.dim, b.dim);
    for (std::size_t i = 0; i < half; ++i) {
        b.gram(i, half + i) = Rational(1);
        b.gram(half + i, i) = Rational(1);
    }
    return b;
}

ResidualSet check_invariant_form(const HomPoissonAlgebra& p, const BilinearForm& b) {
    std::size_t n = p.dim;
    if (b.dim != n || b.gram.rows() != n || b.gram.cols() != n)
        throw shape_error("bilinear form has wrong shape", "B");

    ResidualSet out;

    {
        ResidualBuilder rb("form.symmetry", {n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rb.at({i, j}) = b.gram(i, j) - b.gram(j, i);
        out.push_back(std::move(rb).done());
    }

    out.push_back(Residual::scalar("form.nondegenerate",
                                   b.gram.determinant().is_zero() ? Rational(1) : Rational(0)));

    auto pair_with = [&](const Coords& u, const Coords& v) {
        Rational acc(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                acc += u[i] * v[j] * b.gram(i, j);
        }
        return acc;
    };

    {
        ResidualBuilder rb("form.bracket_invariance", {n, n, n});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Coords bxy = p.bracket.apply(basis_vector(n, x), basis_vector(n, y));
                    Coords byz = p.bracket.apply(basis_vector(n, y), basis_vector(n, z));
                    rb.at({x, y, z}) = pair_with(bxy, p.alpha.column(z)) -
                                       pair_with(p.alpha.column(x), byz);
                }
        out.push_back(std::move(rb).done());
    }
    {
        ResidualBuilder rb("form.product_invariance", {n, n, n});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Coords mxy = p.mul.apply(basis_vector(n, x), basis_vector(n, y));
                    Coords myz = p.mul.apply(basis_vector(n, y), basis_vector(n, z));
                    rb.at({x, y, z}) = pair_with(mxy, p.alpha.column(z)) -
                                       pair_with(p.alpha.column(x), myz);
                }
        out.push_back(std::move(rb).done());
    }

    return out;
}

ResidualSet check_manin_triple(const HomPoissonAlgebra& p, const ManinPartition& split,
                               const BilinearForm& b) {
    std::size_t n = p.dim;
    std::vector<int> side(n, -1);
    auto mark = [&](const std::vector<std::size_t>& part, int tag) {
        for (std::size_t i : part) {
            if (i >= n || side[i] != -1)
                throw precondition_error("PartitionInvalid",
                                         "plus/minus index sets do not partition the basis");
            side[i] = tag;
        }
    };
    mark(split.plus, 0);
    mark(split.minus, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (side[i] == -1)
            throw precondition_error("PartitionInvalid",
                                     "plus/minus index sets do not partition the basis");

    ResidualSet out;
    absorb(out, "ambient", check_hom_poisson(p));

    auto closure = [&](const char* label, const StructureTensor& c, int tag) {
        ResidualBuilder rb(label, {n, n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (side[i] != tag || side[j] != tag)
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (side[k] != tag)
                        rb.at({i, j, k}) = c(i, j, k);
            }
        return std::move(rb).done();
    };
    out.push_back(closure("manin.plus_bracket_closure", p.bracket, 0));
    out.push_back(closure("manin.plus_product_closure", p.mul, 0));
    out.push_back(closure("manin.minus_bracket_closure", p.bracket, 1));
    out.push_back(closure("manin.minus_product_closure", p.mul, 1));

    auto twist_closure = [&](const char* label, int tag) {
        ResidualBuilder rb(label, {n, n});
        for (std::size_t j = 0; j < n; ++j) {
            if (side[j] != tag)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                if (side[i] != tag)
                    rb.at({j, i}) = p.alpha(i, j);
        }
        return std::move(rb).done();
    };
    out.push_back(twist_closure("manin.plus_twist_closure", 0));
    out.push_back(twist_closure("manin.minus_twist_closure", 1));

    auto isotropy = [&](const char* label, int tag) {
        ResidualBuilder rb(label, {n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (side[i] == tag && side[j] == tag)
                    rb.at({i, j}) = b.gram(i, j);
        return std::move(rb).done();
    };
    out.push_back(isotropy("manin.plus_isotropic", 0));
    out.push_back(isotropy("manin.minus_isotropic", 1));

    absorb(out, "", check_invariant_form(p, b));
    return out;
}

MatchedPairPoisson coadjoint_matched_pair(const HomPoissonAlgebra& p, const HomPoissonAlgebra& pstar) {
    if (pstar.dim != p.dim)
        throw shape_error("dual structure must have the same dimension", "p2");
    MatchedPairPoisson mp;
    mp.P1 = p;
    mp.P2 = pstar;
    mp.rho1 = dual_action(ActionTensor::left_regular(p.bracket));
    mp.mu1 = -dual_action(ActionTensor::left_regular(p.mul));
    mp.rho2 = dual_action(ActionTensor::left_regular(pstar.bracket));
    mp.mu2 = -dual_action(ActionTensor::left_regular(pstar.mul));
    return mp;
}

StandardManin standard_manin_triple(const HomPoissonAlgebra& p, const HomPoissonAlgebra& pstar) {
    std::size_t n = p.dim;
    StandardManin out;
    out.algebra = bowtie_poisson(coadjoint_matched_pair(p, pstar));
    out.form = BilinearForm::hyperbolic(n);
    out.split.plus.resize(n);
    out.split.minus.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.split.plus[i] = i;
        out.split.minus[i] = n + i;
    }
    return out;
}

} // namespace homps
