#include "homps/solve.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace homps {

namespace {

Residual pack_tensor3(const std::string& label, const Tensor3& t) {
    std::size_t d = t.dim();
    ResidualBuilder b(label, {d, d, d});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                b.at({i, j, k}) = t(i, j, k);
    return std::move(b).done();
}

void require_fixture(bool ok, const std::string& what) {
    if (!ok)
        throw precondition_error("FixtureInvalid", "fixture fails its own structure check: " + what);
}

const Rational& require_weight(const SearchSpec& spec) {
    if (!spec.weight)
        throw schema_error("search target needs a weight");
    return *spec.weight;
}

} // namespace

SearchTarget search_target_of(const std::string& name) {
    if (name == "chybe")
        return SearchTarget::chybe;
    if (name == "haybe")
        return SearchTarget::haybe;
    if (name == "hpybe")
        return SearchTarget::hpybe;
    if (name == "rota-baxter")
        return SearchTarget::rota_baxter;
    if (name == "o-operator")
        return SearchTarget::o_operator;
    if (name == "matched-pair")
        return SearchTarget::matched_pair;
    throw schema_error("unknown search target: " + name);
}

std::string to_string(SearchTarget t) {
    switch (t) {
    case SearchTarget::chybe: return "chybe";
    case SearchTarget::haybe: return "haybe";
    case SearchTarget::hpybe: return "hpybe";
    case SearchTarget::rota_baxter: return "rota-baxter";
    case SearchTarget::o_operator: return "o-operator";
    case SearchTarget::matched_pair: return "matched-pair";
    }
    return "?";
}

SearchSpec load_search_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path.string(), 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), 0, 0);
    }

    SearchSpec spec;
    if (!j.contains("target") || !j["target"].is_string())
        throw schema_error("search spec needs a target");
    spec.target = search_target_of(j["target"].get<std::string>());

    if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty())
        throw schema_error("search spec needs a non-empty grid");
    for (const auto& g : j["grid"]) {
        if (!g.is_string())
            throw schema_error("grid values must be \"p/q\" strings");
        spec.grid.push_back(Rational::parse(g.get<std::string>()));
    }

    if (!j.contains("fixture") || !j["fixture"].is_string())
        throw schema_error("search spec needs a fixture path");
    std::filesystem::path fixture = j["fixture"].get<std::string>();
    if (fixture.is_relative())
        fixture = path.parent_path() / fixture;
    spec.fixture = fixture;

    if (j.contains("weight"))
        spec.weight = Rational::parse(j["weight"].get<std::string>());
    if (j.contains("cap"))
        spec.cap = j["cap"].get<std::uint64_t>();
    if (j.contains("haybe_variant"))
        spec.haybe = j["haybe_variant"].get<std::string>() == "as-printed"
                         ? HaybeVariant::as_printed
                         : HaybeVariant::standard;
    return spec;
}

std::vector<Solution> solve(const SearchSpec& spec) {
    return solve(spec, load_structure(spec.fixture));
}

std::vector<Solution> solve(const SearchSpec& spec, const StructureFile& fixture) {
    if (spec.grid.empty())
        throw schema_error("grid must be non-empty");

    std::size_t ncoeff = 0;
    std::function<ResidualSet(const std::vector<Rational>&)> battery;

    switch (spec.target) {
    case SearchTarget::chybe: {
        HomLieAlgebra l = as_hom_lie(fixture);
        require_fixture(all_zero(check_hom_lie(l)), "hom-lie axioms");
        ncoeff = l.dim * l.dim;
        battery = [l](const std::vector<Rational>& c) {
            RTensor r(l.dim);
            r.entries() = c;
            return ResidualSet{pack_tensor3("chybe", chybe_residual(l, r))};
        };
        break;
    }
    case SearchTarget::haybe: {
        HomAssocAlgebra a = as_hom_assoc(fixture);
        require_fixture(all_zero(check_hom_associative(a, true)), "hom-associative axioms");
        ncoeff = a.dim * a.dim;
        HaybeVariant variant = spec.haybe;
        battery = [a, variant](const std::vector<Rational>& c) {
            RTensor r(a.dim);
            r.entries() = c;
            return ResidualSet{pack_tensor3("haybe", haybe_residual(a, r, variant))};
        };
        break;
    }
    case SearchTarget::hpybe: {
        HomPoissonAlgebra p = as_hom_poisson(fixture);
        require_fixture(all_zero(check_hom_poisson(p)), "hom-poisson axioms");
        ncoeff = p.dim * p.dim;
        HaybeVariant variant = spec.haybe;
        battery = [p, variant](const std::vector<Rational>& c) {
            RTensor r(p.dim);
            r.entries() = c;
            return ResidualSet{pack_tensor3("chybe", chybe_residual(lie_part(p), r)),
                               pack_tensor3("haybe", haybe_residual(assoc_part(p), r, variant))};
        };
        break;
    }
    case SearchTarget::rota_baxter: {
        HomPoissonAlgebra p = as_hom_poisson(fixture);
        require_fixture(all_zero(check_hom_poisson(p)), "hom-poisson axioms");
        Rational weight = require_weight(spec);
        ncoeff = p.dim * p.dim;
        battery = [p, weight](const std::vector<Rational>& c) {
            LinearMap r(p.dim, p.dim);
            for (std::size_t i = 0; i < p.dim; ++i)
                for (std::size_t j = 0; j < p.dim; ++j)
                    r(i, j) = c[i * p.dim + j];
            return check_rota_baxter(p, r, weight);
        };
        break;
    }
    case SearchTarget::o_operator: {
        ModuleHomPoisson m = as_module_hom_poisson(fixture);
        require_fixture(all_zero(check_module_hom_poisson(m)), "module axioms");
        Rational weight = require_weight(spec);
        std::size_t n = m.base.dim, v = m.V.dim;
        ncoeff = n * v;
        battery = [m, weight, n, v](const std::vector<Rational>& c) {
            LinearMap r(n, v);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < v; ++j)
                    r(i, j) = c[i * v + j];
            return check_o_operator({r, weight, m});
        };
        break;
    }
    case SearchTarget::matched_pair: {
        HomLieAlgebra l1 = as_hom_lie(fixture);
        if (!fixture.p2)
            throw schema_error("matched-pair search needs p2");
        HomLieAlgebra l2 = as_hom_lie(*fixture.p2);
        require_fixture(all_zero(check_hom_lie(l1)) && all_zero(check_hom_lie(l2)),
                        "hom-lie axioms");
        std::size_t n1 = l1.dim, n2 = l2.dim;
        ncoeff = n1 * n2 * n2 + n2 * n1 * n1;
        battery = [l1, l2, n1, n2](const std::vector<Rational>& c) {
            ActionTensor rho1(n1, n2), rho2(n2, n1);
            std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n1 * n2 * n2),
                      rho1.entries().begin());
            std::copy(c.begin() + static_cast<std::ptrdiff_t>(n1 * n2 * n2), c.end(),
                      rho2.entries().begin());
            return check_matched_pair_lie({l1, l2, rho1, rho2});
        };
        break;
    }
    }

    // Cap check before enumerating.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ncoeff; ++i) {
        if (total > spec.cap / spec.grid.size() + 1)
            throw grid_capacity_error(0, spec.cap); // size overflows the cap anyway
        total *= spec.grid.size();
        if (total > spec.cap)
            throw grid_capacity_error(total, spec.cap);
    }

    std::vector<Solution> solutions;
    std::vector<std::size_t> odometer(ncoeff, 0);
    std::vector<Rational> point(ncoeff, spec.grid[0]);
    for (std::size_t i = 0; i < ncoeff; ++i)
        point[i] = spec.grid[0];

    for (std::uint64_t step = 0; step < total; ++step) {
        ResidualSet rs = battery(point);
        if (all_zero(rs))
            solutions.push_back({point, std::move(rs)});

        // advance odometer, last coordinate fastest (lexicographic order)
        for (std::size_t i = ncoeff; i-- > 0;) {
            if (++odometer[i] < spec.grid.size()) {
                point[i] = spec.grid[odometer[i]];
                break;
            }
            odometer[i] = 0;
            point[i] = spec.grid[0];
        }
    }
    return solutions;
}

} // namespace homps
