#include "homps/legs.hpp"

#include <array>

namespace homps {

namespace {
// Slot positions (0-based) occupied by the two legs.
std::array<std::size_t, 2> slots_of(Legs legs) {
    switch (legs) {
    case Legs::L12: return {0, 1};
    case Legs::L13: return {0, 2};
    case Legs::L23: return {1, 2};
    }
    throw shape_error("unknown leg placement");
}
} // namespace

Tensor3 embed_leg(const RTensor& r, Legs legs) {
    std::size_t n = r.dim();
    std::size_t unit = n; // padding slot
    Tensor3 out(n + 1);
    auto [p1, p2] = slots_of(legs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r(i, j).is_zero())
                continue;
            std::array<std::size_t, 3> idx{unit, unit, unit};
            idx[p1] = i;
            idx[p2] = j;
            out(idx[0], idx[1], idx[2]) += r(i, j);
        }
    return out;
}

Tensor3 leg_product(const RTensor& r, Legs r_legs, const RTensor& s, Legs s_legs,
                    const StructureTensor& op) {
    std::size_t n = r.dim();
    if (s.dim() != n || op.dim() != n)
        throw shape_error("leg product dimension mismatch");
    if (r_legs == s_legs)
        throw shape_error("coinciding leg placements have a unit component; "
                          "use the padded variant");

    auto [p1, p2] = slots_of(r_legs);
    auto [q1, q2] = slots_of(s_legs);

    // Exactly one slot is shared by two distinct placements.
    std::size_t shared = 0;
    for (std::size_t pos = 0; pos < 3; ++pos) {
        bool in_r = pos == p1 || pos == p2;
        bool in_s = pos == q1 || pos == q2;
        if (in_r && in_s)
            shared = pos;
    }

    Tensor3 out(n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (r(i1, i2).is_zero())
                continue;
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    Rational coeff = r(i1, i2) * s(j1, j2);
                    if (coeff.is_zero())
                        continue;
                    // r's legs land on p1,p2 and s's on q1,q2; at the shared
                    // slot the r-leg multiplies the s-leg in that order.
                    std::size_t a = shared == p1 ? i1 : i2;
                    std::size_t b = shared == q1 ? j1 : j2;
                    std::array<std::size_t, 3> idx{0, 0, 0};
                    for (std::size_t pos = 0; pos < 3; ++pos) {
                        if (pos == shared)
                            continue;
                        if (pos == p1)
                            idx[pos] = i1;
                        else if (pos == p2)
                            idx[pos] = i2;
                        else if (pos == q1)
                            idx[pos] = j1;
                        else
                            idx[pos] = j2;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        if (op(a, b, k).is_zero())
                            continue;
                        idx[shared] = k;
                        out(idx[0], idx[1], idx[2]) += coeff * op(a, b, k);
                    }
                }
        }
    return out;
}

Tensor3 leg_product_23_23(const RTensor& r, const RTensor& s, const StructureTensor& op) {
    std::size_t n = r.dim();
    if (s.dim() != n || op.dim() != n)
        throw shape_error("leg product dimension mismatch");
    std::size_t unit = n;
    Tensor3 out(n + 1);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (r(i1, i2).is_zero())
                continue;
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    Rational coeff = r(i1, i2) * s(j1, j2);
                    if (coeff.is_zero())
                        continue;
                    for (std::size_t k1 = 0; k1 < n; ++k1) {
                        if (op(i1, j1, k1).is_zero())
                            continue;
                        Rational c1 = coeff * op(i1, j1, k1);
                        for (std::size_t k2 = 0; k2 < n; ++k2)
                            out(unit, k1, k2) += c1 * op(i2, j2, k2);
                    }
                }
        }
    return out;
}

} // namespace homps
