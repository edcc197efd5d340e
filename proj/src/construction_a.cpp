#include "oddleech/construction_a.hpp"

#include <stdexcept>
#include <utility>

#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"

namespace oddleech {

LatticeRep make_lattice_rep(IntMatrix basis, std::int64_t scale, std::optional<std::string> id) {
    if (scale < 1) throw std::invalid_argument("lattice scale must be positive");
    LatticeRep rep;
    rep.scale = scale;
    rep.gram_scaled = gram(basis, Integer(static_cast<long>(scale)));
    rep.basis = std::move(basis);
    rep.source_code_id = std::move(id);
    return rep;
}

LatticeRep construction_a(const ZkCode& code) {
    if (!is_self_dual(code)) throw std::invalid_argument("construction_a: code is not self-dual");
    const std::size_t n = code.length();
    const Integer k(static_cast<long>(code.modulus()));
    HnfResult h = hnf(vstack(code.generator(), IntMatrix::identity(n).scaled(k)));
    std::optional<std::string> id;
    if (!code.label().empty()) id = code.label();
    LatticeRep rep = make_lattice_rep(std::move(h.basis), code.modulus(), std::move(id));
    if (abs(det(rep.gram_scaled)) != 1) {
        throw VerificationError("construction_a: Gram determinant is not ±1");
    }
    return rep;
}

Rational min_norm_formula(std::int64_t k, std::int64_t euclidean_min) {
    if (k <= 0) throw std::invalid_argument("min_norm_formula: k must be positive");
    const Integer kk(static_cast<long>(k));
    const Integer d(static_cast<long>(euclidean_min));
    // d/k < k  <=>  d < k^2
    if (d >= kk * kk) return {kk, Integer(1)};
    Integer g = gcd(d, kk);
    return {d / g, kk / g};
}

}  // namespace oddleech
