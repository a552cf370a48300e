#pragma once

#include "homps/io.hpp"

namespace homps {

enum class SearchTarget { chybe, haybe, hpybe, rota_baxter, o_operator, matched_pair };

SearchTarget search_target_of(const std::string& name);
std::string to_string(SearchTarget t);

/// Exhaustive grid search description. The free coefficients are the entries
/// of the searched object in row-major order: an r element (dim^2), an
/// operator matrix (dim x vdim), or the pair of Hom-Lie matched-pair actions.
struct SearchSpec {
    SearchTarget target = SearchTarget::chybe;
    std::vector<Rational> grid;
    std::filesystem::path fixture;
    std::optional<Rational> weight;
    std::uint64_t cap = 10'000'000;
    HaybeVariant haybe = HaybeVariant::standard;
};

SearchSpec load_search_spec(const std::filesystem::path& path);

struct Solution {
    std::vector<Rational> coords;
    ResidualSet certificate; // the recomputed residual battery, all zero
};

/// Enumerates the full grid in lexicographic coordinate order and returns
/// every all-zero point with its residual certificate. Throws
/// precondition_error("FixtureInvalid") when the fixture fails its own
/// structure check and grid_capacity_error past the cap.
std::vector<Solution> solve(const SearchSpec& spec);
std::vector<Solution> solve(const SearchSpec& spec, const StructureFile& fixture);

} // namespace homps
