#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace oddleech {

using Integer = mpz_class;

/// Exact conversion; throws std::overflow_error when the value does not fit.
inline std::int64_t to_int64(const Integer& value) {
    if (!value.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
    }
    return static_cast<std::int64_t>(value.get_si());
}

inline Integer from_int64(std::int64_t value) { return Integer(static_cast<long>(value)); }

/// Least non-negative residue of value mod modulus (modulus > 0).
inline Integer mod_floor(const Integer& value, const Integer& modulus) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

inline std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// floor(sqrt(n)) for n >= 0.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t());
    return r.get_si();
}

inline bool is_square(std::int64_t n, std::int64_t& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

}  // namespace oddleech
