#pragma once

#include "homps/errors.hpp"
#include "homps/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace homps {

/// Coordinate vector relative to a fixed basis.
using Coords = std::vector<Rational>;

Coords basis_vector(std::size_t dim, std::size_t i);
Coords zero_vector(std::size_t dim);
Coords operator+(const Coords& a, const Coords& b);
Coords operator-(const Coords& a, const Coords& b);
Coords operator*(const Rational& c, const Coords& v);
bool is_zero(const Coords& v);

/// Dense rows x cols matrix of rationals acting on coordinate columns:
/// (M v)_i = sum_j M(i,j) v_j, so column j holds the image of basis vector j.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static LinearMap identity(std::size_t n);
    static LinearMap diagonal(const std::vector<Rational>& d);
    static LinearMap from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    Coords column(std::size_t j) const;
    Coords apply(const Coords& v) const;

    LinearMap transposed() const;

    /// Exact determinant by fraction-free elimination; square matrices only.
    Rational determinant() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    LinearMap operator*(const LinearMap& o) const;
    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap operator-() const;
    friend LinearMap operator*(const Rational& c, LinearMap m);

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_; // row-major
};

/// Dual of T: V1 -> V2 relative to dual bases, defined by
/// <v, T*(w*)> = <T(v), w*>; concretely the matrix transpose.
LinearMap dual_map(const LinearMap& m);

/// Block-diagonal sum acting on the direct sum of the two coordinate spaces.
LinearMap direct_sum(const LinearMap& a, const LinearMap& b);

} // namespace homps
