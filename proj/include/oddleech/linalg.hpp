#pragma once

#include <cstddef>
#include <cstdint>

#include "oddleech/int_matrix.hpp"

namespace oddleech {

struct HnfResult {
    IntMatrix basis;  ///< rank × cols, row-style Hermite normal form
    std::size_t rank = 0;
};

/// Row-style Hermite normal form of the row lattice of m. Pivots are positive and the
/// entries above each pivot lie in [0, pivot). Zero rows are dropped.
HnfResult hnf(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws on non-square input.
Integer det(const IntMatrix& m);

/// Lovász parameter num/den, with 1/4 < num/den <= 1.
struct LllDelta {
    long num = 3;
    long den = 4;
};

struct LllResult {
    IntMatrix basis;      ///< reduced basis B' = U·B
    IntMatrix transform;  ///< unimodular U
};

/// Integral LLL on the rows of b (exact arithmetic throughout). Throws std::invalid_argument
/// when the rows are linearly dependent.
LllResult lll_reduce(const IntMatrix& b, LllDelta delta = {});

/// (B·Bᵀ)/scale. Throws DivisibilityError when an entry of B·Bᵀ is not divisible by scale.
IntMatrix gram(const IntMatrix& b, const Integer& scale);

/// Leading principal minors all positive.
bool is_positive_definite(const IntMatrix& g);

}  // namespace oddleech
