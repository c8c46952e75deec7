/*
 * Symbolic primitive spaces: elements of degree m*e_i orthogonal to all
 * products of lower-degree pieces, computed in the radical quotient of
 * the extended generator set.
 */
#pragma once

#include "formalg/pairing.hpp"

namespace formalg {

struct PrimitiveSpace {
    int dim = 0;                 // dimension inside the radical quotient
    AlgebraElement xi;           // normalized: coefficient of z_{i,m} is 1 (if dim >= 1)
    bool has_xi = false;
};

// i must be an imaginary vertex of q; m >= 1.  Works in EXTENDED(q, m).
PrimitiveSpace primitive_space_symbolic(const Quiver& q, const std::string& i, int m);

} // namespace formalg
