#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homps/solve.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace homps;
using testutil::Rng;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("homps_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("round trip preserves every field exactly") {
    TempDir tmp;
    Rng rng(131);

    // a fully loaded file: algebra + comultiplications + r + module data
    StructureFile f = structure_file_of(testutil::fixture_hom_assoc_q(Rational(1, 2)));
    HomPoissonAlgebra p = as_hom_poisson(f);
    RTensor r(2);
    r(0, 0) = Rational(1, 3); // exact third survives the trip
    f.r = r;
    f.delta = rng.costructure(2);
    f.Delta = rng.costructure(2);
    f.vdim = 2;
    f.beta = rng.matrix(2, 2);
    f.S = rng.action(2, 2);
    f.T = rng.action(2, 2);
    f.vmul = rng.structure(2);
    f.vbracket = rng.structure(2);
    f.R = rng.matrix(2, 2);
    f.weight = Rational(-5, 7);
    f.B = rng.matrix(2, 2);
    f.plus_basis = std::vector<std::size_t>{0};
    f.minus_basis = std::vector<std::size_t>{1};
    f.basis = {"e1", "e2"};
    f.metadata["note"] = "fixture";
    f.p2 = std::make_shared<StructureFile>(structure_file_of(testutil::fixture_point()));
    f.rho1 = rng.action(2, 1);
    f.mu1 = rng.action(2, 1);
    f.rho2 = rng.action(1, 2);
    f.mu2 = rng.action(1, 2);

    auto path = tmp.path / "full.json";
    save_structure(f, path);
    StructureFile g = load_structure(path);

    CHECK(g.dim == f.dim);
    CHECK(g.basis == f.basis);
    CHECK(*g.alpha == *f.alpha);
    CHECK(*g.mul == *f.mul);
    CHECK(*g.bracket == *f.bracket);
    CHECK(*g.delta == *f.delta);
    CHECK(*g.Delta == *f.Delta);
    CHECK(*g.r == *f.r);
    CHECK((*g.r)(0, 0) == Rational(1, 3));
    CHECK(*g.R == *f.R);
    CHECK(*g.weight == *f.weight);
    CHECK(*g.vdim == *f.vdim);
    CHECK(*g.beta == *f.beta);
    CHECK(*g.S == *f.S);
    CHECK(*g.T == *f.T);
    CHECK(*g.vmul == *f.vmul);
    CHECK(*g.vbracket == *f.vbracket);
    CHECK(*g.B == *f.B);
    CHECK(*g.plus_basis == *f.plus_basis);
    CHECK(*g.minus_basis == *f.minus_basis);
    CHECK(g.metadata.at("note") == "fixture");
    REQUIRE(g.p2 != nullptr);
    CHECK(*g.p2->mul == *f.p2->mul);
    CHECK(*g.rho1 == *f.rho1);
    CHECK(*g.mu2 == *f.mu2);

    // serialized form re-parses to the same bytes (determinism)
    CHECK(serialize_structure(g) == serialize_structure(f));

    // a view through the loaded file equals the original algebra
    HomPoissonAlgebra q = as_hom_poisson(g);
    CHECK(q.mul == p.mul);
    CHECK(q.alpha == p.alpha);
}

TEST_CASE("minimal file and error reporting") {
    TempDir tmp;

    // dim-1 file with mul only
    write_text(tmp.path / "min.json", R"({
  "schema": 1,
  "dim": 1,
  "alpha": [["1"]],
  "tensors": { "mul": [[["1"]]] }
})");
    StructureFile f = load_structure(tmp.path / "min.json");
    HomAssocAlgebra a = as_hom_assoc(f);
    CHECK(a.mul(0, 0, 0) == Rational(1));
    CHECK(all_zero(check_hom_associative(a, true)));
    CHECK_THROWS_AS(as_hom_lie(f), schema_error);

    // wrong alpha shape names the tensor
    write_text(tmp.path / "badshape.json", R"({
  "schema": 1,
  "dim": 2,
  "alpha": [["1","0","0"],["0","1","0"],["0","0","1"]]
})");
    try {
        load_structure(tmp.path / "badshape.json");
        FAIL("expected shape_error");
    } catch (const shape_error& e) {
        CHECK(e.tensor() == "alpha");
    }

    // parse errors carry line and column
    write_text(tmp.path / "broken.json", "{\n  \"schema\": 1,\n  oops\n}");
    try {
        load_structure(tmp.path / "broken.json");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }

    // unsupported schema and non-rational scalars
    write_text(tmp.path / "v2.json", R"({"schema": 2, "dim": 1})");
    CHECK_THROWS_AS(load_structure(tmp.path / "v2.json"), schema_error);
    write_text(tmp.path / "float.json", R"({
  "schema": 1, "dim": 1, "alpha": [["0.5"]]
})");
    CHECK_THROWS_AS(load_structure(tmp.path / "float.json"), schema_error);
}

TEST_CASE("solver finds every chybe solution on the abelian fixture") {
    TempDir tmp;
    save_structure(structure_file_of(testutil::fixture_abelian2()), tmp.path / "ab.json");

    SearchSpec spec;
    spec.target = SearchTarget::chybe;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "ab.json";
    auto sols = solve(spec);
    CHECK(sols.size() == 81); // every point solves the abelian equation
}

TEST_CASE("solver output is deterministic and oracle-verified") {
    TempDir tmp;
    save_structure(structure_file_of(testutil::fixture_nonabelian_lie()), tmp.path / "na.json");

    SearchSpec spec;
    spec.target = SearchTarget::chybe;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "na.json";

    auto sols = solve(spec);
    auto again = solve(spec);
    REQUIRE(sols.size() == again.size());
    for (std::size_t i = 0; i < sols.size(); ++i)
        CHECK(sols[i].coords == again[i].coords);

    // contains r = 0 and the skew solution, and the oracle re-verifies all
    HomLieAlgebra l = lie_part(testutil::fixture_nonabelian_lie());
    bool has_zero = false, has_skew = false;
    for (const auto& s : sols) {
        RTensor r(2);
        r.entries() = s.coords;
        CHECK(oracle::chybe(l, r).is_zero());
        if (r.is_zero())
            has_zero = true;
        if (r == testutil::skew_r2())
            has_skew = true;
    }
    CHECK(has_zero);
    CHECK(has_skew);

    // completeness: a direct loop over the grid agrees point for point
    std::size_t expected = 0;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    RTensor r(2);
                    r(0, 0) = Rational(a);
                    r(0, 1) = Rational(b);
                    r(1, 0) = Rational(c);
                    r(1, 1) = Rational(d);
                    if (oracle::chybe(l, r).is_zero())
                        ++expected;
                }
    CHECK(sols.size() == expected);
}

TEST_CASE("rota-baxter search finds the identity at weight -1") {
    TempDir tmp;
    save_structure(structure_file_of(testutil::fixture_nonabelian_lie()), tmp.path / "na.json");

    SearchSpec spec;
    spec.target = SearchTarget::rota_baxter;
    spec.grid = {Rational(0), Rational(1)};
    spec.fixture = tmp.path / "na.json";
    spec.weight = Rational(-1);

    auto sols = solve(spec);
    bool has_identity = false;
    for (const auto& s : sols) {
        LinearMap r(2, 2);
        r(0, 0) = s.coords[0];
        r(0, 1) = s.coords[1];
        r(1, 0) = s.coords[2];
        r(1, 1) = s.coords[3];
        if (r == LinearMap::identity(2))
            has_identity = true;
        CHECK(all_zero(check_rota_baxter(testutil::fixture_nonabelian_lie(), r, Rational(-1))));
    }
    CHECK(has_identity);
}

TEST_CASE("matched pair search over two lines") {
    TempDir tmp;
    StructureFile f = structure_file_of(zero_poisson(1));
    f.p2 = std::make_shared<StructureFile>(structure_file_of(zero_poisson(1)));
    save_structure(f, tmp.path / "pair.json");

    SearchSpec spec;
    spec.target = SearchTarget::matched_pair;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "pair.json";

    auto sols = solve(spec);
    CHECK(sols.size() == 9); // two free coefficients, all compatible
    for (const auto& s : sols) {
        MatchedPairLie mp{{1, LinearMap::identity(1), StructureTensor(1)},
                          {1, LinearMap::identity(1), StructureTensor(1)},
                          ActionTensor(1, 1),
                          ActionTensor(1, 1)};
        mp.rho1(0, 0, 0) = s.coords[0];
        mp.rho2(0, 0, 0) = s.coords[1];
        CHECK(all_zero(check_hom_lie(bowtie_lie(mp))));
    }
}

TEST_CASE("hpybe search intersects both solution sets") {
    TempDir tmp;
    // bracket on the first coordinate pair only; the mixed fixture keeps the
    // two equations genuinely independent
    save_structure(structure_file_of(testutil::fixture_nonabelian_lie()), tmp.path / "na.json");

    SearchSpec spec;
    spec.target = SearchTarget::hpybe;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "na.json";
    auto sols = solve(spec);

    // with a zero product every chybe solution solves the pair
    SearchSpec chybe_spec = spec;
    chybe_spec.target = SearchTarget::chybe;
    CHECK(sols.size() == solve(chybe_spec).size());

    // with the unital-looking product the joint set is a strict subset
    save_structure(structure_file_of(testutil::fixture_dual_number()), tmp.path / "dn.json");
    SearchSpec dn_spec = spec;
    dn_spec.fixture = tmp.path / "dn.json";
    auto dn_sols = solve(dn_spec);
    HomPoissonAlgebra dn = testutil::fixture_dual_number();
    for (const auto& s : dn_sols) {
        RTensor r(2);
        r.entries() = s.coords;
        CHECK(oracle::haybe_standard(assoc_part(dn), r).is_zero());
        CHECK(oracle::chybe(lie_part(dn), r).is_zero());
    }
    CHECK(dn_sols.size() < 81);
}

TEST_CASE("o-operator search over a one-dimensional module") {
    TempDir tmp;
    HomPoissonAlgebra p = testutil::fixture_nonabelian_lie();
    StructureFile f = structure_file_of(p);
    f.vdim = 1;
    f.beta = LinearMap::identity(1);
    // e1 acts on the line by a derivation weight, e2 by zero
    ActionTensor s(2, 1);
    s(0, 0, 0) = Rational(1);
    f.S = s;
    f.T = ActionTensor(2, 1);
    save_structure(f, tmp.path / "mod.json");

    SearchSpec spec;
    spec.target = SearchTarget::o_operator;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "mod.json";
    spec.weight = Rational(0);
    auto sols = solve(spec);
    CHECK(!sols.empty());
    ModuleHomPoisson m = as_module_hom_poisson(f);
    for (const auto& s2 : sols) {
        LinearMap r(2, 1);
        r(0, 0) = s2.coords[0];
        r(1, 0) = s2.coords[1];
        CHECK(all_zero(check_o_operator({r, Rational(0), m})));
    }
}

TEST_CASE("solver guard rails") {
    TempDir tmp;
    save_structure(structure_file_of(testutil::fixture_nonabelian_lie()), tmp.path / "na.json");

    // grid too large
    SearchSpec spec;
    spec.target = SearchTarget::chybe;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    spec.fixture = tmp.path / "na.json";
    spec.cap = 80; // 81 points needed
    CHECK_THROWS_AS(solve(spec), grid_capacity_error);

    // invalid fixture
    HomPoissonAlgebra bad = testutil::fixture_nonabelian_lie();
    bad.bracket(0, 0, 0) = Rational(1);
    save_structure(structure_file_of(bad), tmp.path / "bad.json");
    SearchSpec spec2;
    spec2.target = SearchTarget::chybe;
    spec2.grid = {Rational(0)};
    spec2.fixture = tmp.path / "bad.json";
    try {
        solve(spec2);
        FAIL("expected FixtureInvalid");
    } catch (const precondition_error& e) {
        CHECK(e.code() == "FixtureInvalid");
    }

    // missing weight
    SearchSpec spec3;
    spec3.target = SearchTarget::rota_baxter;
    spec3.grid = {Rational(0)};
    spec3.fixture = tmp.path / "na.json";
    CHECK_THROWS_AS(solve(spec3), schema_error);
}

TEST_CASE("search specs load from json") {
    TempDir tmp;
    save_structure(structure_file_of(testutil::fixture_nonabelian_lie()), tmp.path / "na.json");
    write_text(tmp.path / "spec.json", R"({
  "target": "chybe",
  "grid": ["-1", "0", "1"],
  "fixture": "na.json",
  "cap": 1000
})");
    SearchSpec spec = load_search_spec(tmp.path / "spec.json");
    CHECK(spec.target == SearchTarget::chybe);
    CHECK(spec.grid.size() == 3);
    CHECK(spec.cap == 1000);
    CHECK(solve(spec).size() > 0);
}
