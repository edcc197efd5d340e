#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddleech/codes.hpp"
#include "oddleech/construction_a.hpp"
#include "oddleech/int_matrix.hpp"

namespace oddleech {

/// (a, b, c, d) with a ≡ d and b ≡ c (mod 4); value() = a² + 11b² + c² + 11d² is then 0 mod 4.
struct QuaternaryRep {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    std::int64_t value() const { return a * a + 11 * b * b + c * c + 11 * d * d; }
    bool valid() const { return mod_floor(a - d, 4) == 0 && mod_floor(b - c, 4) == 0; }
    bool operator==(const QuaternaryRep&) const = default;
};

struct FourSquares {
    std::int64_t w = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    std::int64_t value() const { return w * w + x * x + y * y + z * z; }
    bool operator==(const FourSquares&) const = default;
};

/// Realization of the odd Leech lattice a certificate lives in: A_4(D) or A_11(C_11).
enum class Ambient { D4, C11 };

std::string_view ambient_name(Ambient ambient);
std::optional<Ambient> parse_ambient(std::string_view name);
/// 4 for D4, 11 for C11.
std::int64_t ambient_scale(Ambient ambient);
const ZkCode& ambient_code(Ambient ambient);
const LatticeRep& ambient_lattice(Ambient ambient);

struct ProvenanceStep {
    std::string operation;
    std::map<std::string, std::int64_t> params;
    bool operator==(const ProvenanceStep&) const = default;
};

/// 24 vectors √s·f_i of the scaled lattice ρ(code) + sZ²⁴ with (f_i, f_j) = k δ_ij.
struct FrameCertificate {
    std::int64_t k = 0;
    Ambient ambient = Ambient::D4;
    std::vector<IntVector> vectors;
    std::vector<ProvenanceStep> provenance;
};

struct FrameChecks {
    bool gram_ok = false;
    bool membership_ok = false;
    bool ok() const { return gram_ok && membership_ok; }
};

inline constexpr std::size_t kFrameDim = 24;

/// Lexicographically greatest (a, b, c, d) with a² + 11b² + c² + 11d² = 4k under the
/// congruences, or nullopt when none exists.
std::optional<QuaternaryRep> represent_quaternary(std::int64_t k);

/// (aI + bS, cI + dS; −cI + dS, aI − bS). Throws std::invalid_argument unless r.valid().
IntMatrix p_matrix(const QuaternaryRep& r);

/// Frame of norm r.value()/4 in A_4(D) from the rows of p_matrix(r).
FrameCertificate frame_from_representation(const QuaternaryRep& r);

/// 11·e_i, i = 1..24, in A_11(C_11).
FrameCertificate standard_frame_11();

/// w ≥ x ≥ y ≥ z ≥ 0 with w² + x² + y² + z² = m, preferring the largest w, then x, then y.
FourSquares four_squares(std::int64_t m);

/// Integer quaternion matrix Q with Q·Qᵀ = (w² + x² + y² + z²)·I_4.
IntMatrix quaternion_block(const FourSquares& s);

/// Applies quaternion_block(four_squares(m)) to each consecutive quadruple of frame vectors.
FrameCertificate multiply_frame(const FrameCertificate& frame, std::int64_t m);

/// Divisor k0 of k used when k has no direct representation: the smallest odd prime factor
/// other than 11, else 4 for powers of two, else 11. Throws std::invalid_argument for k < 3.
std::int64_t fallback_base_norm(std::int64_t k);

/// A verified frame of norm k in the odd Leech lattice. Throws std::invalid_argument for k < 3.
FrameCertificate build_frame(std::int64_t k);

FrameChecks check_frame(const FrameCertificate& frame);
bool verify_frame(const FrameCertificate& frame);

/// Self-dual Z_k code C of length 24 with A_k(C) isometric to the certificate's lattice.
ZkCode extract_code(const FrameCertificate& frame);

}  // namespace oddleech
