#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "oddleech/construction_a.hpp"
#include "oddleech/int_matrix.hpp"

namespace oddleech {

struct ShortVectorReport {
    std::int64_t norm_bound = 0;
    /// Nonzero norms only; v and -v are both counted.
    std::map<std::int64_t, std::uint64_t> counts_by_norm;
    /// Vectors of the scaled lattice K (ambient integer coordinates), sorted lexicographically.
    std::vector<IntVector> witnesses;
};

/// Largest bound short_vectors accepts for lattices of dimension > 4.
inline constexpr std::int64_t kShortVectorBoundGuard = 8;
/// Largest N theta_coeffs accepts for lattices of dimension > 4.
inline constexpr std::int64_t kThetaGuard = 16;

bool is_unimodular(const LatticeRep& lattice);

/// All diagonal Gram entries even. Meaningful for integral lattices.
bool is_even(const LatticeRep& lattice);

/// Exact counts of lattice vectors with 0 < norm <= bound (norms read off gram_scaled).
/// The basis is LLL-reduced first; the floating-point branch bounds carry a +1/2 slack and
/// every candidate is re-checked in exact integer arithmetic.
ShortVectorReport short_vectors(const LatticeRep& lattice, std::int64_t bound, bool want_witnesses = false);

std::int64_t min_norm(const LatticeRep& lattice);

/// a(0..n) with a(m) = number of lattice vectors of norm m.
std::vector<std::uint64_t> theta_coeffs(const LatticeRep& lattice, std::int64_t n);
/// Same for the lattice with the given positive definite Gram matrix (no reduction step).
std::vector<std::uint64_t> theta_coeffs(const IntMatrix& gram, std::int64_t n);

/// Enumeration on an explicit positive definite Gram matrix (no LLL, no guard). Returned
/// coordinate vectors are coefficient vectors with respect to that Gram's basis.
ShortVectorReport enumerate_gram(const IntMatrix& gram, std::int64_t bound, bool want_witnesses);

}  // namespace oddleech
