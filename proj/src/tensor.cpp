#include "homps/tensor.hpp"

namespace homps {

namespace {
bool all_zero_entries(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}
} // namespace

bool StructureTensor::is_zero() const { return all_zero_entries(c_); }

Coords StructureTensor::apply(const Coords& x, const Coords& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw shape_error("structure tensor applied to vectors of wrong length");
    Coords out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            Rational cij = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                out[k] += cij * (*this)(i, j, k);
        }
    }
    return out;
}

LinearMap StructureTensor::left_matrix(const Coords& x) const {
    if (x.size() != dim_)
        throw shape_error("left multiplication by vector of wrong length");
    LinearMap m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                m(k, j) += x[i] * (*this)(i, j, k);
    }
    return m;
}

LinearMap StructureTensor::right_matrix(const Coords& y) const {
    if (y.size() != dim_)
        throw shape_error("right multiplication by vector of wrong length");
    LinearMap m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero())
            continue;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k)
                m(k, i) += y[j] * (*this)(i, j, k);
    }
    return m;
}

StructureTensor StructureTensor::scaled(const Rational& c) const {
    StructureTensor out(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = c * c_[i];
    return out;
}

ActionTensor ActionTensor::left_regular(const StructureTensor& c) {
    ActionTensor s(c.dim(), c.dim());
    for (std::size_t x = 0; x < c.dim(); ++x)
        for (std::size_t u = 0; u < c.dim(); ++u)
            for (std::size_t v = 0; v < c.dim(); ++v)
                s(x, u, v) = c(x, u, v);
    return s;
}

bool ActionTensor::is_zero() const { return all_zero_entries(s_); }

LinearMap ActionTensor::matrix(const Coords& x) const {
    if (x.size() != adim_)
        throw shape_error("action applied to algebra vector of wrong length");
    LinearMap m(vdim_, vdim_);
    for (std::size_t i = 0; i < adim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t u = 0; u < vdim_; ++u)
            for (std::size_t v = 0; v < vdim_; ++v)
                m(v, u) += x[i] * (*this)(i, u, v);
    }
    return m;
}

Coords ActionTensor::apply(const Coords& x, const Coords& u) const {
    if (x.size() != adim_ || u.size() != vdim_)
        throw shape_error("action applied to vectors of wrong length");
    Coords out(vdim_);
    for (std::size_t i = 0; i < adim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t p = 0; p < vdim_; ++p) {
            if (u[p].is_zero())
                continue;
            Rational c = x[i] * u[p];
            for (std::size_t v = 0; v < vdim_; ++v)
                out[v] += c * (*this)(i, p, v);
        }
    }
    return out;
}

ActionTensor ActionTensor::operator-() const {
    ActionTensor out(adim_, vdim_);
    for (std::size_t i = 0; i < s_.size(); ++i)
        out.s_[i] = -s_[i];
    return out;
}

ActionTensor dual_action(const ActionTensor& rho) {
    ActionTensor out(rho.adim(), rho.vdim());
    for (std::size_t x = 0; x < rho.adim(); ++x)
        for (std::size_t u = 0; u < rho.vdim(); ++u)
            for (std::size_t v = 0; v < rho.vdim(); ++v)
                out(x, u, v) = -rho(x, v, u);
    return out;
}

bool RTensor::is_zero() const { return all_zero_entries(r_); }

LinearMap RTensor::as_map() const {
    LinearMap m(dim_, dim_);
    for (std::size_t p = 0; p < dim_; ++p)
        for (std::size_t j = 0; j < dim_; ++j)
            m(j, p) = (*this)(p, j);
    return m;
}

RTensor RTensor::operator+(const RTensor& o) const {
    if (dim_ != o.dim_)
        throw shape_error("tensor sum dimension mismatch");
    RTensor out(dim_);
    for (std::size_t i = 0; i < r_.size(); ++i)
        out.r_[i] = r_[i] + o.r_[i];
    return out;
}

RTensor RTensor::operator-(const RTensor& o) const {
    if (dim_ != o.dim_)
        throw shape_error("tensor difference dimension mismatch");
    RTensor out(dim_);
    for (std::size_t i = 0; i < r_.size(); ++i)
        out.r_[i] = r_[i] - o.r_[i];
    return out;
}

RTensor RTensor::scaled(const Rational& c) const {
    RTensor out(dim_);
    for (std::size_t i = 0; i < r_.size(); ++i)
        out.r_[i] = c * r_[i];
    return out;
}

RTensor flip_tau(const RTensor& r) {
    RTensor out(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            out(i, j) = r(j, i);
    return out;
}

bool Tensor3::is_zero() const { return all_zero_entries(t_); }

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    if (dim_ != o.dim_)
        throw shape_error("tensor sum dimension mismatch");
    Tensor3 out(dim_);
    for (std::size_t i = 0; i < t_.size(); ++i)
        out.t_[i] = t_[i] + o.t_[i];
    return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    if (dim_ != o.dim_)
        throw shape_error("tensor difference dimension mismatch");
    Tensor3 out(dim_);
    for (std::size_t i = 0; i < t_.size(); ++i)
        out.t_[i] = t_[i] - o.t_[i];
    return out;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 out(dim_);
    for (std::size_t i = 0; i < t_.size(); ++i)
        out.t_[i] = -t_[i];
    return out;
}

Tensor3 Tensor3::scaled(const Rational& c) const {
    Tensor3 out(dim_);
    for (std::size_t i = 0; i < t_.size(); ++i)
        out.t_[i] = c * t_[i];
    return out;
}

Tensor3 apply_slotwise(const LinearMap& m1, const LinearMap& m2, const LinearMap& m3, const Tensor3& t) {
    std::size_t n = t.dim();
    if (m1.cols() != n || m2.cols() != n || m3.cols() != n ||
        m1.rows() != n || m2.rows() != n || m3.rows() != n)
        throw shape_error("slotwise operator dimension mismatch");
    Tensor3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
                const Rational& src = t(p, q, s);
                if (src.is_zero())
                    continue;
                for (std::size_t a = 0; a < n; ++a) {
                    if (m1(a, p).is_zero())
                        continue;
                    Rational c1 = src * m1(a, p);
                    for (std::size_t b = 0; b < n; ++b) {
                        if (m2(b, q).is_zero())
                            continue;
                        Rational c2 = c1 * m2(b, q);
                        for (std::size_t c = 0; c < n; ++c)
                            out(a, b, c) += c2 * m3(c, s);
                    }
                }
            }
    return out;
}

bool CoStructureTensor::is_zero() const { return all_zero_entries(d_); }

RTensor CoStructureTensor::apply(const Coords& x) const {
    if (x.size() != dim_)
        throw shape_error("comultiplication applied to vector of wrong length");
    RTensor out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        if (x[k].is_zero())
            continue;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                out(i, j) += x[k] * (*this)(k, i, j);
    }
    return out;
}

RTensor apply_slotwise(const LinearMap& m1, const LinearMap& m2, const RTensor& r) {
    std::size_t n = r.dim();
    if (m1.cols() != n || m2.cols() != n || m1.rows() != n || m2.rows() != n)
        throw shape_error("slotwise operator dimension mismatch");
    RTensor out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Rational& src = r(p, q);
            if (src.is_zero())
                continue;
            for (std::size_t a = 0; a < n; ++a) {
                if (m1(a, p).is_zero())
                    continue;
                Rational c1 = src * m1(a, p);
                for (std::size_t b = 0; b < n; ++b)
                    out(a, b) += c1 * m2(b, q);
            }
        }
    return out;
}

} // namespace homps
