#include "homps/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace homps {

namespace {

using json = nlohmann::ordered_json;

// nlohmann reports byte offsets; recover line/column for the error message.
[[noreturn]] void rethrow_parse_error(const std::string& text, const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw parse_error(e.what(), line, column);
}

Rational scalar_of(const json& j, const std::string& what) {
    if (!j.is_string())
        throw schema_error(what + ": scalars must be \"p/q\" strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw schema_error(what + ": " + e.what());
    }
}

LinearMap matrix_of(const json& j, std::size_t rows, std::size_t cols, const std::string& name) {
    if (!j.is_array() || j.size() != rows)
        throw shape_error(name + " must be a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " matrix",
                          name);
    LinearMap m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw shape_error(name + " must be a " + std::to_string(rows) + "x" +
                                  std::to_string(cols) + " matrix",
                              name);
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_of(row[k], name);
    }
    return m;
}

// rank-3 array with per-level extents
std::vector<Rational> cube_of(const json& j, std::size_t d0, std::size_t d1, std::size_t d2,
                              const std::string& name) {
    auto bad = [&]() -> shape_error {
        return shape_error(name + " must be a " + std::to_string(d0) + "x" + std::to_string(d1) +
                               "x" + std::to_string(d2) + " array",
                           name);
    };
    if (!j.is_array() || j.size() != d0)
        throw bad();
    std::vector<Rational> out;
    out.reserve(d0 * d1 * d2);
    for (std::size_t a = 0; a < d0; ++a) {
        if (!j[a].is_array() || j[a].size() != d1)
            throw bad();
        for (std::size_t b = 0; b < d1; ++b) {
            if (!j[a][b].is_array() || j[a][b].size() != d2)
                throw bad();
            for (std::size_t c = 0; c < d2; ++c)
                out.push_back(scalar_of(j[a][b][c], name));
        }
    }
    return out;
}

StructureTensor structure_of(const json& j, std::size_t dim, const std::string& name) {
    StructureTensor t(dim);
    t.entries() = cube_of(j, dim, dim, dim, name);
    return t;
}

CoStructureTensor costructure_json_of(const json& j, std::size_t dim, const std::string& name) {
    CoStructureTensor t(dim);
    t.entries() = cube_of(j, dim, dim, dim, name);
    return t;
}

ActionTensor action_of(const json& j, std::size_t adim, std::size_t vdim, const std::string& name) {
    ActionTensor t(adim, vdim);
    t.entries() = cube_of(j, adim, vdim, vdim, name);
    return t;
}

json matrix_json(const LinearMap& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json cube_json(const std::vector<Rational>& v, std::size_t d0, std::size_t d1, std::size_t d2) {
    json out = json::array();
    std::size_t idx = 0;
    for (std::size_t a = 0; a < d0; ++a) {
        json plane = json::array();
        for (std::size_t b = 0; b < d1; ++b) {
            json row = json::array();
            for (std::size_t c = 0; c < d2; ++c)
                row.push_back(v[idx++].str());
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

StructureFile structure_from_json(const json& j);

void read_tensors(const json& tensors, StructureFile& f) {
    std::size_t n = f.dim;
    std::size_t v = f.vdim.value_or(n);
    std::size_t n2 = f.p2 ? f.p2->dim : 0;

    for (const auto& [key, value] : tensors.items()) {
        if (key == "mul")
            f.mul = structure_of(value, n, key);
        else if (key == "bracket")
            f.bracket = structure_of(value, n, key);
        else if (key == "delta")
            f.delta = costructure_json_of(value, n, key);
        else if (key == "Delta")
            f.Delta = costructure_json_of(value, n, key);
        else if (key == "r") {
            RTensor r(n);
            LinearMap m = matrix_of(value, n, n, key);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    r(a, b) = m(a, b);
            f.r = std::move(r);
        } else if (key == "R")
            f.R = matrix_of(value, n, v, key);
        else if (key == "beta")
            f.beta = matrix_of(value, v, v, key);
        else if (key == "S")
            f.S = action_of(value, n, v, key);
        else if (key == "T")
            f.T = action_of(value, n, v, key);
        else if (key == "vmul")
            f.vmul = structure_of(value, v, key);
        else if (key == "vbracket")
            f.vbracket = structure_of(value, v, key);
        else if (key == "B")
            f.B = matrix_of(value, n, n, key);
        else if (key == "rho1")
            f.rho1 = action_of(value, n, n2, key);
        else if (key == "mu1")
            f.mu1 = action_of(value, n, n2, key);
        else if (key == "rho2")
            f.rho2 = action_of(value, n2, n, key);
        else if (key == "mu2")
            f.mu2 = action_of(value, n2, n, key);
        else if (key == "lie")
            f.lie = structure_of(value, n, key);
        else if (key == "diamond")
            f.diamond = structure_of(value, n, key);
        else if (key == "dot")
            f.dot = structure_of(value, n, key);
        else if (key == "succ")
            f.succ = structure_of(value, n, key);
        else
            throw schema_error("unknown tensor role: " + key);
    }
}

StructureFile structure_from_json(const json& j) {
    if (!j.is_object())
        throw schema_error("structure file must be a JSON object");
    StructureFile f;

    if (!j.contains("schema") || !j["schema"].is_number_integer())
        throw schema_error("missing schema version");
    f.schema = j["schema"].get<int>();
    if (f.schema != 1)
        throw schema_error("unsupported schema version " + std::to_string(f.schema));

    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw schema_error("missing dim");
    f.dim = j["dim"].get<std::size_t>();

    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != f.dim)
            throw schema_error("basis must list dim names");
        for (const auto& b : j["basis"])
            f.basis.push_back(b.get<std::string>());
    }

    if (j.contains("vdim")) {
        if (!j["vdim"].is_number_unsigned())
            throw schema_error("vdim must be a count");
        f.vdim = j["vdim"].get<std::size_t>();
    }
    if (j.contains("weight"))
        f.weight = scalar_of(j["weight"], "weight");
    if (j.contains("p2"))
        f.p2 = std::make_shared<StructureFile>(structure_from_json(j["p2"]));

    if (j.contains("alpha"))
        f.alpha = matrix_of(j["alpha"], f.dim, f.dim, "alpha");
    if (j.contains("unit")) {
        const json& u = j["unit"];
        if (!u.is_array() || u.size() != f.dim)
            throw shape_error("unit must have dim entries", "unit");
        Coords coords;
        for (const auto& x : u)
            coords.push_back(scalar_of(x, "unit"));
        f.unit = std::move(coords);
    }

    if (j.contains("tensors")) {
        if (!j["tensors"].is_object())
            throw schema_error("tensors must be an object keyed by role");
        read_tensors(j["tensors"], f);
    }

    auto indices = [&](const char* key) -> std::optional<std::vector<std::size_t>> {
        if (!j.contains(key))
            return std::nullopt;
        if (!j[key].is_array())
            throw schema_error(std::string(key) + " must be an index array");
        std::vector<std::size_t> out;
        for (const auto& x : j[key]) {
            if (!x.is_number_unsigned())
                throw schema_error(std::string(key) + " must hold basis indices");
            out.push_back(x.get<std::size_t>());
        }
        return out;
    };
    f.plus_basis = indices("plus_basis");
    f.minus_basis = indices("minus_basis");

    if (j.contains("metadata")) {
        for (const auto& [k, v] : j["metadata"].items())
            f.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }

    return f;
}

json structure_to_json(const StructureFile& f) {
    json j;
    j["schema"] = f.schema;
    j["dim"] = f.dim;
    if (!f.basis.empty())
        j["basis"] = f.basis;
    if (f.vdim)
        j["vdim"] = *f.vdim;
    if (f.weight)
        j["weight"] = f.weight->str();
    if (f.alpha)
        j["alpha"] = matrix_json(*f.alpha);
    if (f.unit) {
        json u = json::array();
        for (const auto& x : *f.unit)
            u.push_back(x.str());
        j["unit"] = u;
    }

    json tensors = json::object();
    std::size_t n = f.dim;
    std::size_t v = f.vdim.value_or(n);
    std::size_t n2 = f.p2 ? f.p2->dim : 0;
    if (f.mul)
        tensors["mul"] = cube_json(f.mul->entries(), n, n, n);
    if (f.bracket)
        tensors["bracket"] = cube_json(f.bracket->entries(), n, n, n);
    if (f.delta)
        tensors["delta"] = cube_json(f.delta->entries(), n, n, n);
    if (f.Delta)
        tensors["Delta"] = cube_json(f.Delta->entries(), n, n, n);
    if (f.r) {
        LinearMap m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                m(a, b) = (*f.r)(a, b);
        tensors["r"] = matrix_json(m);
    }
    if (f.R)
        tensors["R"] = matrix_json(*f.R);
    if (f.beta)
        tensors["beta"] = matrix_json(*f.beta);
    if (f.S)
        tensors["S"] = cube_json(f.S->entries(), n, v, v);
    if (f.T)
        tensors["T"] = cube_json(f.T->entries(), n, v, v);
    if (f.vmul)
        tensors["vmul"] = cube_json(f.vmul->entries(), v, v, v);
    if (f.vbracket)
        tensors["vbracket"] = cube_json(f.vbracket->entries(), v, v, v);
    if (f.B)
        tensors["B"] = matrix_json(*f.B);
    if (f.rho1)
        tensors["rho1"] = cube_json(f.rho1->entries(), n, n2, n2);
    if (f.mu1)
        tensors["mu1"] = cube_json(f.mu1->entries(), n, n2, n2);
    if (f.rho2)
        tensors["rho2"] = cube_json(f.rho2->entries(), n2, n, n);
    if (f.mu2)
        tensors["mu2"] = cube_json(f.mu2->entries(), n2, n, n);
    if (f.lie)
        tensors["lie"] = cube_json(f.lie->entries(), n, n, n);
    if (f.diamond)
        tensors["diamond"] = cube_json(f.diamond->entries(), n, n, n);
    if (f.dot)
        tensors["dot"] = cube_json(f.dot->entries(), n, n, n);
    if (f.succ)
        tensors["succ"] = cube_json(f.succ->entries(), n, n, n);
    if (!tensors.empty())
        j["tensors"] = std::move(tensors);

    if (f.p2)
        j["p2"] = structure_to_json(*f.p2);
    if (f.plus_basis)
        j["plus_basis"] = *f.plus_basis;
    if (f.minus_basis)
        j["minus_basis"] = *f.minus_basis;
    if (!f.metadata.empty()) {
        json meta = json::object();
        for (const auto& [k, value] : f.metadata)
            meta[k] = value;
        j["metadata"] = meta;
    }
    return j;
}

const LinearMap& need_alpha(const StructureFile& f) {
    if (!f.alpha)
        throw schema_error("missing alpha");
    return *f.alpha;
}

} // namespace

StructureFile parse_structure(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        rethrow_parse_error(text, e);
    }
    return structure_from_json(j);
}

StructureFile load_structure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path.string(), 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str());
}

std::string serialize_structure(const StructureFile& f) {
    return structure_to_json(f).dump(2) + "\n";
}

void save_structure(const StructureFile& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open " + path.string() + " for writing", 0, 0);
    out << serialize_structure(f);
}

HomAssocAlgebra as_hom_assoc(const StructureFile& f) {
    if (!f.mul)
        throw schema_error("missing mul");
    return {f.dim, need_alpha(f), *f.mul, f.unit};
}

HomLieAlgebra as_hom_lie(const StructureFile& f) {
    if (!f.bracket)
        throw schema_error("missing bracket");
    return {f.dim, need_alpha(f), *f.bracket};
}

HomPoissonAlgebra as_hom_poisson(const StructureFile& f) {
    // Either operation may be omitted and defaults to zero.
    if (!f.mul && !f.bracket)
        throw schema_error("missing both mul and bracket");
    return {f.dim, need_alpha(f), f.mul.value_or(StructureTensor(f.dim)),
            f.bracket.value_or(StructureTensor(f.dim))};
}

PoissonModule as_poisson_module(const StructureFile& f) {
    if (!f.vdim)
        throw schema_error("missing vdim");
    if (!f.beta)
        throw schema_error("missing beta");
    if (!f.S)
        throw schema_error("missing S");
    if (!f.T)
        throw schema_error("missing T");
    return {as_hom_poisson(f), *f.vdim, *f.beta, *f.S, *f.T};
}

MatchedPairPoisson as_matched_pair(const StructureFile& f) {
    if (!f.p2)
        throw schema_error("missing p2 (second algebra of the pair)");
    if (!f.rho1 || !f.mu1 || !f.rho2 || !f.mu2)
        throw schema_error("missing matched-pair actions rho1/mu1/rho2/mu2");
    return {as_hom_poisson(f), as_hom_poisson(*f.p2), *f.rho1, *f.mu1, *f.rho2, *f.mu2};
}

HomPoissonBialgebra as_bialgebra(const StructureFile& f) {
    if (!f.delta)
        throw schema_error("missing delta");
    if (!f.Delta)
        throw schema_error("missing Delta");
    return {as_hom_poisson(f), *f.delta, *f.Delta};
}

PostHomPoisson as_post(const StructureFile& f) {
    std::size_t n = f.dim;
    if (!f.lie && !f.diamond && !f.dot && !f.succ)
        throw schema_error("missing post operations lie/diamond/dot/succ");
    return {n, need_alpha(f), f.lie.value_or(StructureTensor(n)),
            f.diamond.value_or(StructureTensor(n)), f.dot.value_or(StructureTensor(n)),
            f.succ.value_or(StructureTensor(n))};
}

ModuleHomPoisson as_module_hom_poisson(const StructureFile& f) {
    if (!f.vdim)
        throw schema_error("missing vdim");
    if (!f.beta)
        throw schema_error("missing beta");
    if (!f.S || !f.T)
        throw schema_error("missing S or T");
    std::size_t v = *f.vdim;
    HomPoissonAlgebra carrier{v, *f.beta, f.vmul.value_or(StructureTensor(v)),
                              f.vbracket.value_or(StructureTensor(v))};
    return {as_hom_poisson(f), carrier, *f.S, *f.T};
}

OOperator as_o_operator(const StructureFile& f) {
    if (!f.R)
        throw schema_error("missing R");
    if (!f.weight)
        throw schema_error("missing weight");
    return {*f.R, *f.weight, as_module_hom_poisson(f)};
}

BilinearForm as_bilinear_form(const StructureFile& f) {
    if (!f.B)
        throw schema_error("missing B");
    return {f.dim, *f.B};
}

ManinPartition as_partition(const StructureFile& f) {
    if (!f.plus_basis || !f.minus_basis)
        throw schema_error("missing plus_basis/minus_basis");
    return {*f.plus_basis, *f.minus_basis};
}

StructureFile structure_file_of(const HomPoissonAlgebra& p) {
    StructureFile f;
    f.dim = p.dim;
    f.alpha = p.alpha;
    f.mul = p.mul;
    f.bracket = p.bracket;
    return f;
}

StructureFile structure_file_of(const PoissonModule& m) {
    StructureFile f = structure_file_of(m.base);
    f.vdim = m.vdim;
    f.beta = m.beta;
    f.S = m.S;
    f.T = m.T;
    return f;
}

StructureFile structure_file_of(const PostHomPoisson& p) {
    StructureFile f;
    f.dim = p.dim;
    f.alpha = p.alpha;
    f.lie = p.lie;
    f.diamond = p.diamond;
    f.dot = p.dot;
    f.succ = p.succ;
    return f;
}

StructureFile structure_file_of(const StandardManin& sm) {
    StructureFile f = structure_file_of(sm.algebra);
    f.B = sm.form.gram;
    f.plus_basis = sm.split.plus;
    f.minus_basis = sm.split.minus;
    return f;
}

StructureFile structure_file_of(const DrinfeldDouble& d) {
    StructureFile f = structure_file_of(d.algebra);
    f.delta = d.delta;
    f.Delta = d.Delta;
    f.r = d.r;
    f.B = d.form.gram;
    f.plus_basis = d.split.plus;
    f.minus_basis = d.split.minus;
    return f;
}

} // namespace homps
