#include "homps/bialgebra.hpp"

namespace homps {

namespace {

void require_codim(const CoStructureTensor& d, std::size_t dim, const char* what) {
    if (d.dim() != dim)
        throw shape_error(std::string(what) + " has wrong shape", what);
}

void require_alpha_invariant(const LinearMap& alpha, const RTensor& r) {
    if (apply_slotwise(alpha, alpha, r) != r)
        throw precondition_error("RNotAlphaInvariant",
                                 "r is not invariant under the twist applied to both legs");
}

// Copies a rank-3 tensor per basis element into a (n, n, n, n) residual.
Residual pack_per_basis(const std::string& label, const std::vector<Tensor3>& ts) {
    std::size_t n = ts.size();
    std::size_t m = n == 0 ? 0 : ts[0].dim();
    ResidualBuilder b(label, {n, m, m, m});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t e = 0; e < m; ++e)
                    b.at({k, a, c, e}) = ts[k](a, c, e);
    return std::move(b).done();
}

Residual pack_per_basis_r(const std::string& label, const std::vector<RTensor>& ts, bool advisory = false) {
    std::size_t n = ts.size();
    std::size_t m = n == 0 ? 0 : ts[0].dim();
    ResidualBuilder b(label, {n, m, m});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v)
                b.at({k, u, v}) = ts[k](u, v);
    Residual r = std::move(b).done();
    r.advisory = advisory;
    return r;
}

// Extends an operator to the unit-padded space. The unit slot maps to
// `unit_image` (the unit itself for a twist, the acting element for a left
// multiplication, since a product landing on the unit slot consumes it).
LinearMap pad_operator(const LinearMap& m, const Coords& unit_image, bool unit_fixed) {
    std::size_t n = m.rows();
    LinearMap out(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = m(i, j);
    for (std::size_t i = 0; i < n && i < unit_image.size(); ++i)
        out(i, n) = unit_image[i];
    if (unit_fixed)
        out(n, n) = Rational(1);
    return out;
}

} // namespace

StructureTensor dualize_costructure(const CoStructureTensor& d) {
    StructureTensor c(d.dim());
    for (std::size_t k = 0; k < d.dim(); ++k)
        for (std::size_t i = 0; i < d.dim(); ++i)
            for (std::size_t j = 0; j < d.dim(); ++j)
                c(i, j, k) = d(k, i, j);
    return c;
}

CoStructureTensor costructure_of(const StructureTensor& c) {
    CoStructureTensor d(c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j)
                d(k, i, j) = c(i, j, k);
    return d;
}

Residual check_lie_cocycle(const HomLieAlgebra& l, const CoStructureTensor& delta) {
    std::size_t n = l.dim;
    require_codim(delta, n, "delta");

    ResidualBuilder b("lie_cocycle", {n, n, n, n});
    for (std::size_t i = 0; i < n; ++i) {
        LinearMap ad_i = l.bracket.left_matrix(basis_vector(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            LinearMap ad_j = l.bracket.left_matrix(basis_vector(n, j));
            RTensor lhs = delta.apply(l.bracket.apply(basis_vector(n, i), basis_vector(n, j)));
            RTensor dj = delta.apply(basis_vector(n, j));
            RTensor di = delta.apply(basis_vector(n, i));
            RTensor rhs = apply_slotwise(ad_i, l.alpha, dj) + apply_slotwise(l.alpha, ad_i, dj) -
                          apply_slotwise(ad_j, l.alpha, di) - apply_slotwise(l.alpha, ad_j, di);
            RTensor diff = lhs - rhs;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    b.at({i, j, u, v}) = diff(u, v);
        }
    }
    return std::move(b).done();
}

Residual check_infinitesimal(const HomAssocAlgebra& a, const CoStructureTensor& Delta) {
    std::size_t n = a.dim;
    require_codim(Delta, n, "Delta");

    ResidualBuilder b("infinitesimal_derivation", {n, n, n, n});
    for (std::size_t i = 0; i < n; ++i) {
        LinearMap left_ai = a.mul.left_matrix(a.alpha.column(i));
        for (std::size_t j = 0; j < n; ++j) {
            LinearMap right_aj = a.mul.right_matrix(a.alpha.column(j));
            RTensor lhs = Delta.apply(a.mul.apply(basis_vector(n, i), basis_vector(n, j)));
            RTensor rhs = apply_slotwise(left_ai, a.alpha, Delta.apply(basis_vector(n, j))) +
                          apply_slotwise(a.alpha, right_aj, Delta.apply(basis_vector(n, i)));
            RTensor diff = lhs - rhs;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    b.at({i, j, u, v}) = diff(u, v);
        }
    }
    return std::move(b).done();
}

ResidualSet check_poisson_coalgebra(const CoStructureTensor& delta, const CoStructureTensor& Delta,
                                    const LinearMap& alpha) {
    std::size_t n = alpha.rows();
    if (alpha.cols() != n)
        throw shape_error("alpha has wrong shape", "alpha");
    require_codim(delta, n, "delta");
    require_codim(Delta, n, "Delta");

    ResidualSet out;

    {
        ResidualBuilder b("coalg.delta_coantisymmetry", {n, n, n});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    b.at({k, i, j}) = delta(k, i, j) + delta(k, j, i);
        out.push_back(std::move(b).done());
    }
    {
        ResidualBuilder b("coalg.Delta_cocommutativity", {n, n, n});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    b.at({k, i, j}) = Delta(k, i, j) - Delta(k, j, i);
        out.push_back(std::move(b).done());
    }

    auto coinvariance = [&](const char* label, const CoStructureTensor& d) {
        ResidualBuilder b(label, {n, n, n});
        for (std::size_t k = 0; k < n; ++k) {
            RTensor diff = d.apply(alpha.column(k)) -
                           apply_slotwise(alpha, alpha, d.apply(basis_vector(n, k)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    b.at({k, i, j}) = diff(i, j);
        }
        return std::move(b).done();
    };
    out.push_back(coinvariance("coalg.delta_coinvariance", delta));
    out.push_back(coinvariance("coalg.Delta_coinvariance", Delta));

    // co-Jacobi: the cyclic sum of (alpha (x) delta) delta.
    {
        ResidualBuilder b("coalg.delta_cojacobi", {n, n, n, n});
        for (std::size_t k = 0; k < n; ++k) {
            Tensor3 u(n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    if (delta(k, p, q).is_zero())
                        continue;
                    for (std::size_t a = 0; a < n; ++a) {
                        if (alpha(a, p).is_zero())
                            continue;
                        Rational c = delta(k, p, q) * alpha(a, p);
                        for (std::size_t s = 0; s < n; ++s)
                            for (std::size_t t = 0; t < n; ++t)
                                u(a, s, t) += c * delta(q, s, t);
                    }
                }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t)
                        b.at({k, a, s, t}) = u(a, s, t) + u(s, t, a) + u(t, a, s);
        }
        out.push_back(std::move(b).done());
    }

    // co-associativity: (Delta (x) alpha) Delta = (alpha (x) Delta) Delta.
    {
        ResidualBuilder b("coalg.Delta_coassociativity", {n, n, n, n});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t) {
                        Rational acc(0);
                        for (std::size_t p = 0; p < n; ++p)
                            for (std::size_t q = 0; q < n; ++q) {
                                if (!Delta(k, p, q).is_zero()) {
                                    acc += Delta(k, p, q) * Delta(p, a, s) * alpha(t, q);
                                    acc -= Delta(k, p, q) * alpha(a, p) * Delta(q, s, t);
                                }
                            }
                        b.at({k, a, s, t}) = acc;
                    }
        out.push_back(std::move(b).done());
    }

    // mixed compatibility:
    // (alpha (x) Delta) delta = (delta (x) alpha) Delta + (tau (x) id)(alpha (x) delta) Delta
    {
        ResidualBuilder b("coalg.mixed_compat", {n, n, n, n});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t) {
                        Rational acc(0);
                        for (std::size_t p = 0; p < n; ++p)
                            for (std::size_t q = 0; q < n; ++q) {
                                if (!delta(k, p, q).is_zero())
                                    acc += delta(k, p, q) * alpha(a, p) * Delta(q, s, t);
                                if (!Delta(k, p, q).is_zero()) {
                                    acc -= Delta(k, p, q) * delta(p, a, s) * alpha(t, q);
                                    acc -= Delta(k, p, q) * alpha(s, p) * delta(q, a, t);
                                }
                            }
                        b.at({k, a, s, t}) = acc;
                    }
        out.push_back(std::move(b).done());
    }

    return out;
}

ResidualSet check_poisson_bialgebra(const HomPoissonBialgebra& bi) {
    std::size_t n = bi.P.dim;
    require_codim(bi.delta, n, "delta");
    require_codim(bi.Delta, n, "Delta");

    ResidualSet out = check_hom_poisson(bi.P);
    absorb(out, "", check_poisson_coalgebra(bi.delta, bi.Delta, bi.P.alpha));
    absorb(out, "", check_lie_cocycle(lie_part(bi.P), bi.delta));
    absorb(out, "", check_infinitesimal(assoc_part(bi.P), bi.Delta));

    const auto& al = bi.P.alpha;
    const auto& mul = bi.P.mul;
    const auto& br = bi.P.bracket;

    // delta(x y) = (L(alpha(y)) (x) alpha)delta(x) + (L(alpha(x)) (x) alpha)delta(y)
    //            - (alpha (x) ad(x))Delta(y) - (alpha (x) ad(y))Delta(x)
    {
        ResidualBuilder b("bialgebra.delta_of_product", {n, n, n, n});
        for (std::size_t i = 0; i < n; ++i) {
            LinearMap left_ai = mul.left_matrix(al.column(i));
            LinearMap ad_i = br.left_matrix(basis_vector(n, i));
            for (std::size_t j = 0; j < n; ++j) {
                LinearMap left_aj = mul.left_matrix(al.column(j));
                LinearMap ad_j = br.left_matrix(basis_vector(n, j));
                RTensor lhs = bi.delta.apply(mul.apply(basis_vector(n, i), basis_vector(n, j)));
                RTensor di = bi.delta.apply(basis_vector(n, i));
                RTensor dj = bi.delta.apply(basis_vector(n, j));
                RTensor Di = bi.Delta.apply(basis_vector(n, i));
                RTensor Dj = bi.Delta.apply(basis_vector(n, j));
                RTensor rhs = apply_slotwise(left_aj, al, di) + apply_slotwise(left_ai, al, dj) -
                              apply_slotwise(al, ad_i, Dj) - apply_slotwise(al, ad_j, Di);
                RTensor diff = lhs - rhs;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v)
                        b.at({i, j, u, v}) = diff(u, v);
            }
        }
        out.push_back(std::move(b).done());
    }

    // Delta({x,y}) = (ad(alpha(x)) (x) alpha + alpha (x) ad(alpha(x)))Delta(y)
    //              + (L(alpha(y)) (x) alpha - alpha (x) L(alpha(y)))delta(x)
    {
        ResidualBuilder b("bialgebra.Delta_of_bracket", {n, n, n, n});
        for (std::size_t i = 0; i < n; ++i) {
            LinearMap ad_ai = br.left_matrix(al.column(i));
            for (std::size_t j = 0; j < n; ++j) {
                LinearMap left_aj = mul.left_matrix(al.column(j));
                RTensor lhs = bi.Delta.apply(br.apply(basis_vector(n, i), basis_vector(n, j)));
                RTensor Dj = bi.Delta.apply(basis_vector(n, j));
                RTensor di = bi.delta.apply(basis_vector(n, i));
                RTensor rhs = apply_slotwise(ad_ai, al, Dj) + apply_slotwise(al, ad_ai, Dj) +
                              apply_slotwise(left_aj, al, di) - apply_slotwise(al, left_aj, di);
                RTensor diff = lhs - rhs;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v)
                        b.at({i, j, u, v}) = diff(u, v);
            }
        }
        out.push_back(std::move(b).done());
    }

    return out;
}

CoStructureTensor coboundary_delta(const HomPoissonAlgebra& p, const RTensor& r) {
    std::size_t n = p.dim;
    if (r.dim() != n)
        throw shape_error("r has wrong shape", "r");
    require_alpha_invariant(p.alpha, r);

    CoStructureTensor d(n);
    for (std::size_t k = 0; k < n; ++k) {
        LinearMap ad_k = p.bracket.left_matrix(basis_vector(n, k));
        RTensor dk = apply_slotwise(ad_k, p.alpha, r) + apply_slotwise(p.alpha, ad_k, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d(k, i, j) = dk(i, j);
    }
    return d;
}

CoStructureTensor coboundary_Delta(const HomPoissonAlgebra& p, const RTensor& r) {
    std::size_t n = p.dim;
    if (r.dim() != n)
        throw shape_error("r has wrong shape", "r");
    require_alpha_invariant(p.alpha, r);

    CoStructureTensor d(n);
    for (std::size_t k = 0; k < n; ++k) {
        LinearMap left_k = p.mul.left_matrix(basis_vector(n, k));
        RTensor dk = apply_slotwise(left_k, p.alpha, r) - apply_slotwise(p.alpha, left_k, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d(k, i, j) = dk(i, j);
    }
    return d;
}

Tensor3 chybe_residual(const HomLieAlgebra& l, const RTensor& r) {
    if (r.dim() != l.dim)
        throw shape_error("r has wrong shape", "r");
    return leg_product(r, Legs::L12, r, Legs::L13, l.bracket) +
           leg_product(r, Legs::L12, r, Legs::L23, l.bracket) +
           leg_product(r, Legs::L13, r, Legs::L23, l.bracket);
}

Tensor3 haybe_residual(const HomAssocAlgebra& a, const RTensor& r, HaybeVariant variant) {
    if (r.dim() != a.dim)
        throw shape_error("r has wrong shape", "r");
    Tensor3 head = leg_product(r, Legs::L13, r, Legs::L12, a.mul) -
                   leg_product(r, Legs::L12, r, Legs::L23, a.mul);
    if (variant == HaybeVariant::standard)
        return head + leg_product(r, Legs::L23, r, Legs::L13, a.mul);

    std::size_t n = a.dim;
    Tensor3 out = leg_product_23_23(r, r, a.mul); // padded, unit in slot one
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                out(x, y, z) += head(x, y, z);
    return out;
}

std::vector<Tensor3> w_residual(const HomPoissonAlgebra& p, const CoStructureTensor& delta,
                                const CoStructureTensor& Delta) {
    std::size_t n = p.dim;
    require_codim(delta, n, "delta");
    require_codim(Delta, n, "Delta");
    const auto& al = p.alpha;

    std::vector<Tensor3> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Tensor3 w(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    Rational acc(0);
                    for (std::size_t pp = 0; pp < n; ++pp)
                        for (std::size_t q = 0; q < n; ++q) {
                            if (!delta(k, pp, q).is_zero())
                                acc += delta(k, pp, q) * al(a, pp) * Delta(q, s, t);
                            if (!Delta(k, pp, q).is_zero()) {
                                acc -= Delta(k, pp, q) * delta(pp, a, s) * al(t, q);
                                for (std::size_t c = 0; c < n; ++c)
                                    acc -= Delta(k, pp, q) * al(s, pp) * delta(q, a, c) * al(t, c);
                            }
                        }
                    w(a, s, t) = acc;
                }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Tensor3> w_closed_form(const HomPoissonAlgebra& p, const RTensor& r) {
    std::size_t n = p.dim;
    if (r.dim() != n)
        throw shape_error("r has wrong shape", "r");
    const auto& al = p.alpha;

    Tensor3 A = haybe_residual(assoc_part(p), r);
    Tensor3 C = chybe_residual(lie_part(p), r);
    RTensor sym = r + flip_tau(r);

    std::vector<Tensor3> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        LinearMap ad_k = p.bracket.left_matrix(basis_vector(n, k));
        LinearMap left_k = p.mul.left_matrix(basis_vector(n, k));

        Tensor3 w = -apply_slotwise(ad_k, al, al, A);
        w = w + apply_slotwise(al, left_k, al, C) - apply_slotwise(al, al, left_k, C);

        RTensor s = apply_slotwise(left_k, al, sym) - apply_slotwise(al, left_k, sym);
        for (std::size_t pp = 0; pp < n; ++pp) {
            LinearMap ad_p = p.bracket.left_matrix(basis_vector(n, pp));
            RTensor inner = apply_slotwise(ad_p, al, s);
            for (std::size_t q = 0; q < n; ++q) {
                if (r(pp, q).is_zero())
                    continue;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v)
                        w(u, v, q) -= r(pp, q) * inner(u, v);
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

ResidualSet check_coboundary_conditions(const HomPoissonAlgebra& p, const RTensor& r,
                                        HaybeVariant variant) {
    std::size_t n = p.dim;
    if (r.dim() != n)
        throw shape_error("r has wrong shape", "r");
    require_alpha_invariant(p.alpha, r);
    const auto& al = p.alpha;

    RTensor sym = r + flip_tau(r);

    ResidualSet out;
    {
        std::vector<RTensor> per_basis, plus_reading;
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap ad_x = p.bracket.left_matrix(basis_vector(n, x));
            per_basis.push_back(apply_slotwise(ad_x, al, sym) + apply_slotwise(al, ad_x, sym));
        }
        out.push_back(pack_per_basis_r("coboundary.sym_bracket_invariance", per_basis));
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap left_x = p.mul.left_matrix(basis_vector(n, x));
            per_basis[x] = apply_slotwise(left_x, al, sym) - apply_slotwise(al, left_x, sym);
            plus_reading.push_back(apply_slotwise(left_x, al, sym) + apply_slotwise(al, left_x, sym));
        }
        out.push_back(pack_per_basis_r("coboundary.sym_product_invariance", per_basis));
        out.push_back(pack_per_basis_r("coboundary.sym_product_invariance_plus_reading",
                                       plus_reading, /*advisory=*/true));
    }

    {
        Tensor3 A = haybe_residual(assoc_part(p), r, variant);
        std::vector<Tensor3> per_basis;
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap left_x = p.mul.left_matrix(basis_vector(n, x));
            LinearMap alx = al;
            if (A.dim() == n + 1) { // as-printed variant carries the unit slot
                left_x = pad_operator(left_x, basis_vector(n, x), /*unit_fixed=*/false);
                alx = pad_operator(al, {}, /*unit_fixed=*/true);
            }
            per_basis.push_back(apply_slotwise(left_x, alx, alx, A) -
                                apply_slotwise(alx, alx, left_x, A));
        }
        out.push_back(pack_per_basis("coboundary.assoc_ybe_invariance", per_basis));
    }

    {
        Tensor3 C = chybe_residual(lie_part(p), r);
        std::vector<Tensor3> per_basis;
        for (std::size_t x = 0; x < n; ++x) {
            LinearMap ad_x = p.bracket.left_matrix(basis_vector(n, x));
            per_basis.push_back(apply_slotwise(ad_x, al, al, C) + apply_slotwise(al, ad_x, al, C) +
                                apply_slotwise(al, al, ad_x, C));
        }
        out.push_back(pack_per_basis("coboundary.lie_ybe_invariance", per_basis));
    }

    out.push_back(pack_per_basis(
        "coboundary.w", w_residual(p, coboundary_delta(p, r), coboundary_Delta(p, r))));

    return out;
}

DrinfeldDouble drinfeld_double(const HomPoissonBialgebra& b) {
    if (!all_zero(check_poisson_bialgebra(b)))
        throw precondition_error("InvalidBialgebra",
                                 "input does not satisfy the bialgebra battery");
    std::size_t n = b.P.dim;

    HomPoissonAlgebra pstar;
    pstar.dim = n;
    pstar.alpha = dual_map(b.P.alpha);
    pstar.bracket = dualize_costructure(b.delta);
    pstar.mul = dualize_costructure(b.Delta);

    StandardManin sm = standard_manin_triple(b.P, pstar);

    RTensor r(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        r(i, n + i) = Rational(1);
    require_alpha_invariant(sm.algebra.alpha, r);

    DrinfeldDouble out;
    out.algebra = sm.algebra;
    out.r = r;
    out.delta = coboundary_delta(out.algebra, r);
    out.Delta = coboundary_Delta(out.algebra, r);
    out.form = sm.form;
    out.split = sm.split;
    return out;
}

} // namespace homps
