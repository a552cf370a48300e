#pragma once

#include "homps/post.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace homps {

/// Parsed structure file: a typed bag of the fields a check or construction
/// may need. Every scalar in the file is an exact "p/q" string; shapes are
/// validated against dim (and vdim / the nested structure where relevant) on
/// load, and a shape_error names the offending tensor.
struct StructureFile {
    int schema = 1;
    std::size_t dim = 0;
    std::vector<std::string> basis; // optional names, defaulted to e1..en

    std::optional<LinearMap> alpha;
    std::optional<Coords> unit;

    std::optional<StructureTensor> mul, bracket;
    std::optional<CoStructureTensor> delta, Delta;
    std::optional<RTensor> r;
    std::optional<LinearMap> R; // operator into the base, dim x vdim
    std::optional<Rational> weight;

    std::optional<std::size_t> vdim;
    std::optional<LinearMap> beta;
    std::optional<ActionTensor> S, T;
    std::optional<StructureTensor> vmul, vbracket;

    std::shared_ptr<StructureFile> p2; // second algebra of a pair
    std::optional<ActionTensor> rho1, mu1, rho2, mu2;

    std::optional<LinearMap> B; // bilinear form
    std::optional<std::vector<std::size_t>> plus_basis, minus_basis;

    std::optional<StructureTensor> lie, diamond, dot, succ;

    std::map<std::string, std::string> metadata;
};

StructureFile load_structure(const std::filesystem::path& path);
StructureFile parse_structure(const std::string& text); // same, from memory
void save_structure(const StructureFile& f, const std::filesystem::path& path);
std::string serialize_structure(const StructureFile& f);

// Typed views; each throws schema_error naming a missing field.
HomAssocAlgebra as_hom_assoc(const StructureFile& f);
HomLieAlgebra as_hom_lie(const StructureFile& f);
HomPoissonAlgebra as_hom_poisson(const StructureFile& f);
PoissonModule as_poisson_module(const StructureFile& f);
MatchedPairPoisson as_matched_pair(const StructureFile& f);
HomPoissonBialgebra as_bialgebra(const StructureFile& f);
PostHomPoisson as_post(const StructureFile& f);
ModuleHomPoisson as_module_hom_poisson(const StructureFile& f);
OOperator as_o_operator(const StructureFile& f);
BilinearForm as_bilinear_form(const StructureFile& f);
ManinPartition as_partition(const StructureFile& f);

// Builders for the construction commands.
StructureFile structure_file_of(const HomPoissonAlgebra& p);
StructureFile structure_file_of(const PoissonModule& m);
StructureFile structure_file_of(const PostHomPoisson& p);
StructureFile structure_file_of(const StandardManin& sm);
StructureFile structure_file_of(const DrinfeldDouble& d);

} // namespace homps
