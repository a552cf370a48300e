#include "homps/linear_map.hpp"

namespace homps {

Coords basis_vector(std::size_t dim, std::size_t i) {
    Coords v(dim);
    v[i] = Rational(1);
    return v;
}

Coords zero_vector(std::size_t dim) { return Coords(dim); }

Coords operator+(const Coords& a, const Coords& b) {
    if (a.size() != b.size())
        throw shape_error("coordinate vectors of different lengths");
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Coords operator-(const Coords& a, const Coords& b) {
    if (a.size() != b.size())
        throw shape_error("coordinate vectors of different lengths");
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Coords operator*(const Rational& c, const Coords& v) {
    Coords out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

bool is_zero(const Coords& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Rational(1);
    return m;
}

LinearMap LinearMap::diagonal(const std::vector<Rational>& d) {
    LinearMap m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    LinearMap m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw shape_error("ragged initializer for matrix");
        std::size_t j = 0;
        for (const auto& x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

Coords LinearMap::column(std::size_t j) const {
    Coords v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Coords LinearMap::apply(const Coords& v) const {
    if (v.size() != cols_)
        throw shape_error("matrix-vector dimension mismatch");
    Coords out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

LinearMap LinearMap::transposed() const {
    LinearMap t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Rational LinearMap::determinant() const {
    if (!is_square())
        throw shape_error("determinant of non-square matrix");
    std::size_t n = rows_;
    LinearMap a = *this;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero())
                continue;
            Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

bool LinearMap::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero())
            return false;
    return true;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
    if (cols_ != o.rows_)
        throw shape_error("matrix product dimension mismatch");
    LinearMap out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out(i, j) += (*this)(i, k) * o(k, j);
        }
    return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw shape_error("matrix sum dimension mismatch");
    LinearMap out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + o.entries_[i];
    return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw shape_error("matrix difference dimension mismatch");
    LinearMap out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - o.entries_[i];
    return out;
}

LinearMap LinearMap::operator-() const {
    LinearMap out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = -entries_[i];
    return out;
}

LinearMap operator*(const Rational& c, LinearMap m) {
    for (auto& x : m.entries_)
        x *= c;
    return m;
}

LinearMap dual_map(const LinearMap& m) { return m.transposed(); }

LinearMap direct_sum(const LinearMap& a, const LinearMap& b) {
    LinearMap out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

} // namespace homps
