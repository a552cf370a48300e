#pragma once

#include "homps/errors.hpp"
#include "homps/linear_map.hpp"
#include "homps/rational.hpp"

#include <cstddef>
#include <vector>

namespace homps {

/// Structure constants of a bilinear operation on a dim-dimensional space:
/// e_i * e_j = sum_k c(i,j,k) e_k.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    const std::vector<Rational>& entries() const { return c_; }
    std::vector<Rational>& entries() { return c_; }

    bool is_zero() const;

    /// Coordinates of x * y.
    Coords apply(const Coords& x, const Coords& y) const;

    /// Matrix of left multiplication by the element with coordinates x.
    LinearMap left_matrix(const Coords& x) const;
    /// Matrix of right multiplication by the element with coordinates y.
    LinearMap right_matrix(const Coords& y) const;

    StructureTensor scaled(const Rational& c) const;

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

/// An algebra acting on a module, stored as s(x,u,v):
/// S(e_x) f_u = sum_v s(x,u,v) f_v  (algebra index first).
class ActionTensor {
public:
    ActionTensor() = default;
    ActionTensor(std::size_t adim, std::size_t vdim)
        : adim_(adim), vdim_(vdim), s_(adim * vdim * vdim) {}

    /// Reads a structure tensor as the left-regular action of the algebra on
    /// itself; for a bracket tensor this is the adjoint action.
    static ActionTensor left_regular(const StructureTensor& c);

    std::size_t adim() const { return adim_; }
    std::size_t vdim() const { return vdim_; }

    Rational& operator()(std::size_t x, std::size_t u, std::size_t v) { return s_[(x * vdim_ + u) * vdim_ + v]; }
    const Rational& operator()(std::size_t x, std::size_t u, std::size_t v) const { return s_[(x * vdim_ + u) * vdim_ + v]; }

    const std::vector<Rational>& entries() const { return s_; }
    std::vector<Rational>& entries() { return s_; }

    bool is_zero() const;

    /// Matrix of S(x) on module coordinates, x given by algebra coordinates.
    LinearMap matrix(const Coords& x) const;
    /// Coordinates of S(x) u.
    Coords apply(const Coords& x, const Coords& u) const;

    ActionTensor operator-() const;

    friend bool operator==(const ActionTensor& a, const ActionTensor& b) {
        return a.adim_ == b.adim_ && a.vdim_ == b.vdim_ && a.s_ == b.s_;
    }
    friend bool operator!=(const ActionTensor& a, const ActionTensor& b) { return !(a == b); }

private:
    std::size_t adim_ = 0;
    std::size_t vdim_ = 0;
    std::vector<Rational> s_;
};

/// The dual action on V*: rho*(x) = -(rho(x))^T for every algebra index x,
/// i.e. <rho*(x) v*, u> = -<v*, rho(x) u>.
ActionTensor dual_action(const ActionTensor& rho);

/// Element r = sum r(i,j) e_i (x) e_j of the twofold tensor power.
class RTensor {
public:
    RTensor() = default;
    explicit RTensor(std::size_t dim) : dim_(dim), r_(dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t i, std::size_t j) { return r_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return r_[i * dim_ + j]; }

    const std::vector<Rational>& entries() const { return r_; }
    std::vector<Rational>& entries() { return r_; }

    bool is_zero() const;

    /// r viewed as a map from the dual space, <r(a*), b*> = <a* (x) b*, r>;
    /// column u holds the coordinates of r(f_u).
    LinearMap as_map() const;

    RTensor operator+(const RTensor& o) const;
    RTensor operator-(const RTensor& o) const;
    RTensor scaled(const Rational& c) const;

    friend bool operator==(const RTensor& a, const RTensor& b) { return a.dim_ == b.dim_ && a.r_ == b.r_; }
    friend bool operator!=(const RTensor& a, const RTensor& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> r_;
};

/// The exchanging operator: flip_tau(r)(i,j) = r(j,i).
RTensor flip_tau(const RTensor& r);

/// Element of the threefold tensor power, t(a,b,c) the coefficient of
/// e_a (x) e_b (x) e_c. Functions producing unit-padded tensors say so; in
/// that case dim() is the algebra dimension plus one and the last index
/// value is the formal unit slot.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : dim_(dim), t_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t a, std::size_t b, std::size_t c) { return t_[(a * dim_ + b) * dim_ + c]; }
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const { return t_[(a * dim_ + b) * dim_ + c]; }

    const std::vector<Rational>& entries() const { return t_; }
    std::vector<Rational>& entries() { return t_; }

    bool is_zero() const;

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator-() const;
    Tensor3 scaled(const Rational& c) const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.t_ == b.t_; }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> t_;
};

/// Applies M1 (x) M2 (x) M3 slotwise to a rank-3 tensor.
Tensor3 apply_slotwise(const LinearMap& m1, const LinearMap& m2, const LinearMap& m3, const Tensor3& t);

/// Comultiplication constants: delta(e_k) = sum d(k,i,j) e_i (x) e_j.
class CoStructureTensor {
public:
    CoStructureTensor() = default;
    explicit CoStructureTensor(std::size_t dim) : dim_(dim), d_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t k, std::size_t i, std::size_t j) { return d_[(k * dim_ + i) * dim_ + j]; }
    const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const { return d_[(k * dim_ + i) * dim_ + j]; }

    const std::vector<Rational>& entries() const { return d_; }
    std::vector<Rational>& entries() { return d_; }

    bool is_zero() const;

    /// delta(x) for an element with coordinates x, as an RTensor.
    RTensor apply(const Coords& x) const;

    friend bool operator==(const CoStructureTensor& a, const CoStructureTensor& b) {
        return a.dim_ == b.dim_ && a.d_ == b.d_;
    }
    friend bool operator!=(const CoStructureTensor& a, const CoStructureTensor& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> d_;
};

/// (m1 (x) m2)(r) on a twofold tensor.
RTensor apply_slotwise(const LinearMap& m1, const LinearMap& m2, const RTensor& r);

} // namespace homps
