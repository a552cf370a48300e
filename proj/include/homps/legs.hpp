#pragma once

#include "homps/tensor.hpp"

namespace homps {

/// Which two of the three tensor slots an element of P (x) P occupies.
enum class Legs { L12, L13, L23 };

/// Embeds r into the threefold power with the remaining slot holding the
/// formal unit. The algebras here are non-unital, so the result lives on the
/// unit-padded space: dim()+1 slots per index, the last one the unit slot.
Tensor3 embed_leg(const RTensor& r, Legs legs);

/// The product r_{pq} * s_{uv} for two distinct leg placements: the slot the
/// placements share multiplies its two legs with `op`, the other two slots
/// pass their leg through (a unit against a leg is the leg itself). For
/// placements sharing exactly one slot the result has no unit component and
/// is returned on the unpadded space.
///
/// Passing a Lie structure tensor as `op` computes the bracket variants
/// [r_{pq}, s_{uv}].
Tensor3 leg_product(const RTensor& r, Legs r_legs, const RTensor& s, Legs s_legs,
                    const StructureTensor& op);

/// r_{23} * s_{23}: both placements coincide, so the first slot carries
/// unit*unit and the result is returned unit-padded (dim()+1, last index the
/// unit slot).
Tensor3 leg_product_23_23(const RTensor& r, const RTensor& s, const StructureTensor& op);

} // namespace homps
