#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "testutil.hpp"

using namespace homps;
using testutil::Rng;

namespace {

void require_matches(const ResidualSet& rs, const oracle::OMap& om) {
    std::size_t regular = 0;
    for (const auto& r : rs) {
        if (r.advisory)
            continue;
        ++regular;
        auto it = om.find(r.label);
        REQUIRE_MESSAGE(it != om.end(), "oracle is missing label ", r.label);
        CHECK_MESSAGE(r.entries == it->second, "entry mismatch at ", r.label);
    }
    CHECK(regular == om.size());
}

// A module over the twisted product fixture that satisfies the full module
// battery but is not dualizable: S(e2) and T(e1) scale differently under the
// mismatched twists.
PoissonModule non_dualizable_module() {
    PoissonModule m;
    m.base = testutil::fixture_hom_assoc_q(Rational(1, 2));
    m.vdim = 2;
    m.beta = LinearMap::diagonal({Rational(1), Rational(2)});
    m.S = ActionTensor(2, 2);
    m.S(1, 1, 0) = Rational(1); // S(e2) f2 = f1
    m.T = ActionTensor(2, 2);
    m.T(0, 0, 0) = Rational(1); // T(e1) = diag(1, 2)
    m.T(0, 1, 1) = Rational(2);
    return m;
}

} // namespace

TEST_CASE("trivial and adjoint representations") {
    auto lie = lie_part(testutil::fixture_nonabelian_lie());
    CHECK(all_zero(check_lie_rep(lie, ActionTensor(2, 3), LinearMap::identity(3))));

    for (const auto& p : testutil::poisson_fixtures()) {
        ActionTensor ad = ActionTensor::left_regular(p.bracket);
        CHECK(all_zero(check_lie_rep(lie_part(p), ad, p.alpha)));
        ActionTensor left = ActionTensor::left_regular(p.mul);
        CHECK(check_assoc_rep(assoc_part(p), left, p.alpha).is_zero());
    }
}

TEST_CASE("representation residuals match the oracle") {
    Rng rng(41);
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t n = 1 + rng.index(2);
        std::size_t v = 1 + rng.index(3);
        HomLieAlgebra l{n, rng.matrix(n, n), rng.structure(n)};
        ActionTensor rho = rng.action(n, v);
        LinearMap beta = rng.matrix(v, v);
        require_matches(check_lie_rep(l, rho, beta), oracle::lie_rep(l, rho, beta));

        HomAssocAlgebra a{n, rng.matrix(n, n), rng.structure(n), std::nullopt};
        ActionTensor mu = rng.action(n, v);
        CHECK(check_assoc_rep(a, mu, beta).entries ==
              oracle::assoc_rep(a, mu, beta)["assoc_rep.product"]);
    }
}

TEST_CASE("adjoint modules pass the full battery") {
    for (const auto& p : testutil::poisson_fixtures()) {
        PoissonModule m = adjoint_module(p);
        CHECK(all_zero(check_poisson_module(m)));
    }
    // zero actions over a valid base also pass
    PoissonModule z{testutil::fixture_dual_number(), 2, LinearMap::identity(2), ActionTensor(2, 2),
                    ActionTensor(2, 2)};
    CHECK(all_zero(check_poisson_module(z)));
}

TEST_CASE("module residuals match the oracle") {
    Rng rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t n = 1 + rng.index(2);
        std::size_t v = 1 + rng.index(2);
        PoissonModule m{{n, rng.matrix(n, n), rng.structure(n), rng.structure(n)},
                        v,
                        rng.matrix(v, v),
                        rng.action(n, v),
                        rng.action(n, v)};
        require_matches(check_poisson_module(m), oracle::poisson_module(m));
        require_matches(dual_module_hypotheses(m), oracle::dual_module_hypotheses(m));
    }
}

TEST_CASE("semidirect product structure") {
    // zero module over the zero algebra
    PoissonModule z{zero_poisson(1), 1, LinearMap::identity(1), ActionTensor(1, 1),
                    ActionTensor(1, 1)};
    HomPoissonAlgebra zp = semidirect_product(z);
    CHECK(zp.dim == 2);
    CHECK(zp.mul.is_zero());
    CHECK(zp.bracket.is_zero());
    CHECK(all_zero(check_hom_poisson(zp)));

    // adjoint module of the one-dimensional idempotent: e v = v e = v
    HomPoissonAlgebra point = testutil::fixture_point();
    HomPoissonAlgebra sd = semidirect_product(adjoint_module(point));
    CHECK(sd.dim == 2);
    CHECK(sd.mul(0, 0, 0) == Rational(1));
    CHECK(sd.mul(0, 1, 1) == Rational(1));
    CHECK(sd.mul(1, 0, 1) == Rational(1));
    CHECK(sd.bracket.is_zero());
    CHECK(all_zero(check_hom_poisson(sd)));
}

TEST_CASE("semidirect validity tracks module validity both ways") {
    // valid module -> valid algebra
    for (const auto& p : testutil::poisson_fixtures()) {
        PoissonModule m = adjoint_module(p);
        CHECK(all_zero(check_hom_poisson(semidirect_product(m))));
    }
    // broken module -> broken algebra, same verdict both sides
    Rng rng(47);
    for (int rep = 0; rep < 40; ++rep) {
        PoissonModule m = adjoint_module(testutil::fixture_nonabelian_lie());
        if (rng.flip())
            m.S(rng.index(2), rng.index(2), rng.index(2)) += Rational(1);
        else
            m.T(rng.index(2), rng.index(2), rng.index(2)) += Rational(1);
        CHECK(all_zero(check_poisson_module(m)) ==
              all_zero(check_hom_poisson(semidirect_product(m))));
    }
}

TEST_CASE("dual module of the adjoint module is the coadjoint module") {
    for (const auto& p : {testutil::fixture_point(), testutil::fixture_abelian2(),
                          testutil::fixture_nonabelian_lie(), testutil::fixture_dual_number(),
                          testutil::fixture_heisenberg(), testutil::fixture_mixed_blocks()}) {
        PoissonModule dual = dual_module(adjoint_module(p));
        PoissonModule coad = coadjoint_module(p);
        CHECK(dual.S == coad.S);
        CHECK(dual.T == coad.T);
        CHECK(dual.beta == coad.beta);
        CHECK(all_zero(check_poisson_module(dual)));
    }

    // zero module dualizes to the zero module
    PoissonModule z{zero_poisson(2), 2, LinearMap(2, 2), ActionTensor(2, 2), ActionTensor(2, 2)};
    PoissonModule dz = dual_module(z);
    CHECK(dz.S.is_zero());
    CHECK(dz.T.is_zero());
}

TEST_CASE("the semidirect product over the dual module is again an algebra") {
    for (const auto& p : {testutil::fixture_point(), testutil::fixture_nonabelian_lie(),
                          testutil::fixture_dual_number(), testutil::fixture_mixed_blocks()}) {
        PoissonModule dual = dual_module(adjoint_module(p));
        CHECK(all_zero(check_hom_poisson(semidirect_product(dual))));
    }
}

TEST_CASE("dual module is an involution for invertible beta") {
    for (const auto& p : {testutil::fixture_point(), testutil::fixture_nonabelian_lie(),
                          testutil::fixture_dual_number()}) {
        PoissonModule m = adjoint_module(p);
        PoissonModule twice = dual_module(dual_module(m));
        CHECK(twice.S == m.S);
        CHECK(twice.T == m.T);
        CHECK(twice.beta == m.beta);
    }
}

TEST_CASE("a valid module can still fail the dualizability hypotheses") {
    PoissonModule m = non_dualizable_module();
    REQUIRE(all_zero(check_poisson_module(m)));

    ResidualSet hyp = dual_module_hypotheses(m);
    CHECK(!all_zero(hyp));
    bool swap_failed = false, product_failed = false;
    for (const auto& r : hyp) {
        if (r.label == "dualizable.s_twist_swap" && !r.is_zero())
            swap_failed = true;
        if (r.label == "dualizable.s_product" && !r.is_zero())
            product_failed = true;
    }
    CHECK(swap_failed);
    CHECK(product_failed);

    try {
        dual_module(m);
        FAIL("expected HypothesisViolated");
    } catch (const precondition_error& e) {
        CHECK(e.code() == "HypothesisViolated");
    }
}
