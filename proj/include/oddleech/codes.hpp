#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oddleech/int_matrix.hpp"

namespace oddleech {

/// Word of residues in {0, ..., k-1}.
using Codeword = std::vector<std::int64_t>;

/// A Z_k-linear code given by a generator matrix with entries reduced into {0, ..., k-1}.
class ZkCode {
 public:
    ZkCode(std::int64_t modulus, IntMatrix generator, std::string label = {});

    std::int64_t modulus() const { return modulus_; }
    std::size_t length() const { return generator_.cols(); }
    const IntMatrix& generator() const { return generator_; }
    const std::string& label() const { return label_; }

 private:
    std::int64_t modulus_;
    IntMatrix generator_;
    std::string label_;
};

/// The 12×12 skew-symmetric matrix S of McKay's Leech construction (entries in {-1, 0, 1}).
IntMatrix mckay_s();

/// First row of the negacirculant block A of the Z_11 code C_11.
IntVector c11_seed_row();

/// Z_4 code with generator (I_12 | 2I_12 + S); its Construction A lattice is the Leech lattice.
ZkCode code_c4();
/// Z_4 code with generator (I_12 | S); its Construction A lattice is the odd Leech lattice.
ZkCode code_d4();
/// Z_11 code with generator (I_12 | A), A the negacirculant of c11_seed_row().
ZkCode code_c11();

/// Row i+1 is row i shifted right by one with the wrapped entry negated mod k.
IntMatrix negacirculant(std::span<const Integer> first_row, std::int64_t k);

/// True iff G·Gᵀ ≡ 0 (mod k) and |C| = k^{n/2}. Throws std::invalid_argument for odd n.
bool is_self_dual(const ZkCode& code);

/// Number of codewords, read off the Hermite form of ρ(G) stacked over k·I_n.
Integer code_size(const ZkCode& code);

std::int64_t euclidean_weight(std::span<const std::int64_t> word, std::int64_t k);

/// G·xᵀ ≡ 0 (mod k). Only a membership test for self-dual codes; throws std::invalid_argument
/// otherwise.
bool membership(const ZkCode& code, std::span<const std::int64_t> word);

/// G·xᵀ ≡ 0 (mod k) without the self-duality precondition check.
bool orthogonal_to_generator(const ZkCode& code, std::span<const std::int64_t> word);

/// log2 of the number of codewords that min_euclidean_weight may enumerate.
inline constexpr double kEnumerationGuardBits = 26.0;

/// min(d_E(C), cap) by enumerating every codeword exactly once. Throws GuardExceeded when
/// log2|C| exceeds kEnumerationGuardBits; use 11·min_norm on the Construction A lattice then.
std::int64_t min_euclidean_weight(const ZkCode& code, std::int64_t cap);
std::int64_t min_euclidean_weight(const ZkCode& code);

Codeword to_codeword(std::span<const Integer> v, std::int64_t k);

}  // namespace oddleech
