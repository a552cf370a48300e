#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homps/legs.hpp"
#include "testutil.hpp"

using namespace homps;
using testutil::Rng;

TEST_CASE("rationals are canonical and exact") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("-7").denominator() == 1);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);

    // round trip through the string form
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Rational x = rng.rational(40);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("matrix product is associative entrywise") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        LinearMap a = rng.matrix(3, 3, 5);
        LinearMap b = rng.matrix(3, 3, 5);
        LinearMap c = rng.matrix(3, 3, 5);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("flip_tau") {
    RTensor r(2);
    r(0, 1) = Rational(1); // e1 (x) e2
    RTensor t = flip_tau(r);
    CHECK(t(1, 0) == Rational(1));
    CHECK(t(0, 1) == Rational(0));

    RTensor sym(2);
    sym(0, 1) = sym(1, 0) = Rational(3, 2);
    CHECK(flip_tau(sym) == sym);

    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        RTensor x = rng.rtensor(3);
        CHECK(flip_tau(flip_tau(x)) == x);
    }
}

TEST_CASE("dual_map is the transpose and contravariant") {
    CHECK(dual_map(LinearMap::identity(3)) == LinearMap::identity(3));
    LinearMap d = LinearMap::diagonal({Rational(1), Rational(2)});
    CHECK(dual_map(d) == d);

    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        LinearMap s = rng.matrix(3, 3);
        LinearMap t = rng.matrix(3, 3);
        CHECK(dual_map(dual_map(s)) == s);
        CHECK(dual_map(s * t) == dual_map(t) * dual_map(s));
    }
}

TEST_CASE("dual_action sign convention") {
    ActionTensor zero(2, 2);
    CHECK(dual_action(zero) == zero);

    // rho(x) = identity on V for every x  ->  rho*(x) = -identity
    ActionTensor idact(2, 2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t u = 0; u < 2; ++u)
            idact(x, u, u) = Rational(1);
    ActionTensor dual = dual_action(idact);
    for (std::size_t x = 0; x < 2; ++x)
        CHECK(dual.matrix(basis_vector(2, x)) == -LinearMap::identity(2));

    Rng rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        ActionTensor s = rng.action(2, 3);
        CHECK(dual_action(dual_action(s)) == s);
        // entrywise: S*(x) = -S(x)^T
        for (std::size_t x = 0; x < 2; ++x) {
            LinearMap m = s.matrix(basis_vector(2, x));
            CHECK(dual_action(s).matrix(basis_vector(2, x)) == -m.transposed());
        }
    }
}

TEST_CASE("embed_leg places the legs and pads with the unit slot") {
    RTensor r(2);
    r(0, 1) = Rational(1); // e1 (x) e2

    Tensor3 t13 = embed_leg(r, Legs::L13);
    CHECK(t13.dim() == 3);
    CHECK(t13(0, 2, 1) == Rational(1)); // e1 (x) unit (x) e2
    Tensor3 sum = t13;
    sum(0, 2, 1) -= Rational(1);
    CHECK(sum.is_zero());

    Tensor3 t23 = embed_leg(r, Legs::L23);
    CHECK(t23(2, 0, 1) == Rational(1)); // unit (x) e1 (x) e2

    CHECK(embed_leg(RTensor(2), Legs::L12).is_zero());
}

namespace {

// Hand-expanded leg products, one explicit formula per pattern.
Tensor3 brute_leg_product(const RTensor& r, Legs lr, const RTensor& s, Legs ls,
                          const StructureTensor& op) {
    std::size_t n = r.dim();
    Tensor3 t(n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    Rational co = r(i1, i2) * s(j1, j2);
                    if (co.is_zero())
                        continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (lr == Legs::L12 && ls == Legs::L13)
                            t(k, i2, j2) += co * op(i1, j1, k);
                        else if (lr == Legs::L13 && ls == Legs::L23)
                            t(i1, j1, k) += co * op(i2, j2, k);
                        else if (lr == Legs::L23 && ls == Legs::L12)
                            t(j1, k, i2) += co * op(i1, j2, k);
                        else if (lr == Legs::L12 && ls == Legs::L23)
                            t(i1, k, j2) += co * op(i2, j1, k);
                        else if (lr == Legs::L13 && ls == Legs::L12)
                            t(k, j2, i2) += co * op(i1, j1, k);
                        else if (lr == Legs::L23 && ls == Legs::L13)
                            t(j1, i1, k) += co * op(i2, j2, k);
                    }
                }
    return t;
}

} // namespace

TEST_CASE("leg_product basic examples") {
    // dim-1 algebra with e e = e, r = s = e (x) e, pattern 12 o 13
    StructureTensor op(1);
    op(0, 0, 0) = Rational(1);
    RTensor r(1);
    r(0, 0) = Rational(1);
    Tensor3 t = leg_product(r, Legs::L12, r, Legs::L13, op);
    CHECK(t(0, 0, 0) == Rational(1));

    // zero operation kills everything
    CHECK(leg_product(r, Legs::L12, r, Legs::L13, StructureTensor(1)).is_zero());

    // coinciding placements are rejected on the unpadded path
    CHECK_THROWS_AS(leg_product(r, Legs::L12, r, Legs::L12, op), shape_error);
}

TEST_CASE("bracket leg product matches the expanded dim-2 value") {
    // [e1,e2] = e2, r = e1 (x) e2 - e2 (x) e1, pattern [12,13]
    auto p = testutil::fixture_nonabelian_lie();
    RTensor r = testutil::skew_r2();
    Tensor3 t = leg_product(r, Legs::L12, r, Legs::L13, p.bracket);
    Tensor3 expected(2);
    expected(1, 1, 0) = Rational(-1); // -e2 (x) e2 (x) e1
    expected(1, 0, 1) = Rational(1);  // +e2 (x) e1 (x) e2
    CHECK(t == expected);
}

TEST_CASE("leg_product agrees with the brute-force expansion") {
    Rng rng(21);
    const Legs patterns[][2] = {{Legs::L12, Legs::L13}, {Legs::L13, Legs::L23},
                                {Legs::L23, Legs::L12}, {Legs::L12, Legs::L23},
                                {Legs::L13, Legs::L12}, {Legs::L23, Legs::L13}};
    for (std::size_t n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 12; ++rep) {
            RTensor r = rng.rtensor(n);
            RTensor s = rng.rtensor(n);
            StructureTensor op = rng.structure(n);
            for (const auto& pat : patterns)
                CHECK(leg_product(r, pat[0], s, pat[1], op) ==
                      brute_leg_product(r, pat[0], s, pat[1], op));
        }
}

TEST_CASE("padded 23 o 23 product lands in the unit slab") {
    StructureTensor op(1);
    op(0, 0, 0) = Rational(1);
    RTensor r(1);
    r(0, 0) = Rational(1);
    Tensor3 t = leg_product_23_23(r, r, op);
    CHECK(t.dim() == 2);
    CHECK(t(1, 0, 0) == Rational(1)); // unit (x) e (x) e
    t(1, 0, 0) = Rational(0);
    CHECK(t.is_zero());
}
