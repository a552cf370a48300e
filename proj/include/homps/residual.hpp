#pragma once

#include "homps/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homps {

/// Exact left-minus-right tensor of one axiom, quantified over basis tuples.
/// The axiom holds iff every entry is zero. Advisory residuals are reported
/// but excluded from pass/fail.
struct Residual {
    std::string label;
    std::vector<std::size_t> shape;
    std::vector<Rational> entries; // row-major over shape
    bool advisory = false;

    static Residual scalar(std::string label, Rational value);

    bool is_zero() const;

    /// Index tuple of the first nonzero entry, absent when zero.
    std::optional<std::vector<std::size_t>> witness() const;

    /// Value at a multi-index.
    const Rational& at(const std::vector<std::size_t>& idx) const;
};

using ResidualSet = std::vector<Residual>;

/// True when every non-advisory residual vanishes.
bool all_zero(const ResidualSet& rs);

/// First non-advisory residual with a nonzero entry, or nullptr.
const Residual* first_failing(const ResidualSet& rs);

/// Prepends "scope." to every label of `inner` and appends to `out`.
void absorb(ResidualSet& out, const std::string& scope, ResidualSet inner);
void absorb(ResidualSet& out, const std::string& scope, Residual inner);

/// Row-major fill helper for residual tensors.
class ResidualBuilder {
public:
    ResidualBuilder(std::string label, std::vector<std::size_t> shape);

    Rational& at(const std::vector<std::size_t>& idx);
    Residual done() &&;

private:
    Residual r_;
};

} // namespace homps
