#include "homps/residual.hpp"

#include <stdexcept>
#include <utility>

namespace homps {

namespace {
std::size_t flat_index(const std::vector<std::size_t>& shape, const std::vector<std::size_t>& idx) {
    if (idx.size() != shape.size())
        throw std::out_of_range("residual index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t d = 0; d < shape.size(); ++d) {
        if (idx[d] >= shape[d])
            throw std::out_of_range("residual index out of range");
        flat = flat * shape[d] + idx[d];
    }
    return flat;
}

std::size_t total_size(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape)
        n *= d;
    return n;
}
} // namespace

Residual Residual::scalar(std::string label, Rational value) {
    Residual r;
    r.label = std::move(label);
    r.shape = {1};
    r.entries = {std::move(value)};
    return r;
}

bool Residual::is_zero() const {
    for (const auto& x : entries)
        if (!x.is_zero())
            return false;
    return true;
}

std::optional<std::vector<std::size_t>> Residual::witness() const {
    for (std::size_t flat = 0; flat < entries.size(); ++flat) {
        if (entries[flat].is_zero())
            continue;
        std::vector<std::size_t> idx(shape.size());
        std::size_t rem = flat;
        for (std::size_t d = shape.size(); d-- > 0;) {
            idx[d] = rem % shape[d];
            rem /= shape[d];
        }
        return idx;
    }
    return std::nullopt;
}

const Rational& Residual::at(const std::vector<std::size_t>& idx) const {
    return entries[flat_index(shape, idx)];
}

bool all_zero(const ResidualSet& rs) {
    for (const auto& r : rs)
        if (!r.advisory && !r.is_zero())
            return false;
    return true;
}

const Residual* first_failing(const ResidualSet& rs) {
    for (const auto& r : rs)
        if (!r.advisory && !r.is_zero())
            return &r;
    return nullptr;
}

void absorb(ResidualSet& out, const std::string& scope, ResidualSet inner) {
    for (auto& r : inner) {
        if (!scope.empty())
            r.label = scope + "." + r.label;
        out.push_back(std::move(r));
    }
}

void absorb(ResidualSet& out, const std::string& scope, Residual inner) {
    if (!scope.empty())
        inner.label = scope + "." + inner.label;
    out.push_back(std::move(inner));
}

ResidualBuilder::ResidualBuilder(std::string label, std::vector<std::size_t> shape) {
    r_.label = std::move(label);
    r_.shape = std::move(shape);
    r_.entries.assign(total_size(r_.shape), Rational(0));
}

Rational& ResidualBuilder::at(const std::vector<std::size_t>& idx) {
    return r_.entries[flat_index(r_.shape, idx)];
}

Residual ResidualBuilder::done() && { return std::move(r_); }

} // namespace homps
