#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oddleech/codes.hpp"
#include "oddleech/int_matrix.hpp"

namespace oddleech {

/// Exact model of A_k(C) = (1/√k)(ρ(C) + kZⁿ): the integer lattice K = ρ(C) + kZⁿ with
/// basis rows B, and the Gram matrix (B·Bᵀ)/k of the unimodular lattice.
struct LatticeRep {
    std::int64_t scale = 1;
    IntMatrix basis;
    IntMatrix gram_scaled;
    std::optional<std::string> source_code_id;

    std::size_t dim() const { return basis.rows(); }
};

/// Wraps an arbitrary full-rank basis; gram_scaled = (B·Bᵀ)/scale (DivisibilityError otherwise).
LatticeRep make_lattice_rep(IntMatrix basis, std::int64_t scale, std::optional<std::string> id = std::nullopt);

/// Square HNF basis of ρ(G) stacked over k·I_n. Throws std::invalid_argument for
/// non-self-dual input and VerificationError if det(gram_scaled) != 1.
LatticeRep construction_a(const ZkCode& code);

struct Rational {
    Integer num;
    Integer den;
    bool operator==(const Rational&) const = default;
};

/// min{k, d_E/k}, reduced to lowest terms.
Rational min_norm_formula(std::int64_t k, std::int64_t euclidean_min);

}  // namespace oddleech
