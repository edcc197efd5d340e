#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddleech/int_matrix.hpp"

namespace oddleech {

/// Truncated q-series: coeffs[i] is the coefficient of q^(offset24/24 + i); exponents up to
/// `precision` are known. Finalized series have offset24 divisible by 24.
class QSeries {
 public:
    QSeries() = default;
    QSeries(std::int64_t precision, std::int64_t offset24, std::vector<Integer> coeffs);

    /// Series with integer exponents; coeffs[i] multiplies q^i.
    static QSeries from_coefficients(std::vector<Integer> coeffs);

    std::int64_t precision() const { return precision_; }
    std::int64_t offset24() const { return offset24_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool integral_exponents() const { return offset24_ % 24 == 0; }

    /// Coefficient of q^n (integer exponents only); zero below the leading exponent.
    Integer coefficient(std::int64_t n) const;
    void set_coefficient(std::int64_t n, const Integer& value);

    /// Product truncated at min of the precisions.
    QSeries operator*(const QSeries& rhs) const;
    QSeries operator-(const QSeries& rhs) const;
    /// Multiplicative inverse; requires offset 0 and constant term ±1.
    QSeries inverse() const;
    QSeries pow(std::int64_t e) const;

    /// Sparse "n:coeff" listing of nonzero terms, separated by spaces.
    std::string to_sparse_text() const;

    /// Same precision and the same coefficient at every exponent (storage offsets may differ).
    bool operator==(const QSeries& rhs) const;

 private:
    std::int64_t precision_ = 0;
    std::int64_t offset24_ = 0;
    std::vector<Integer> coeffs_;
};

struct EtaFactor {
    std::int64_t arg_multiple;  ///< m in η(mz)
    std::int64_t exponent;      ///< may be negative
};

/// ∏ η(m z)^e truncated at exponent n. Throws std::invalid_argument when Σ m·e is not a
/// multiple of 24.
QSeries eta_product(std::span<const EtaFactor> factors, std::int64_t n);

/// σ₁(n) = sum of the positive divisors of n.
Integer sigma1(std::int64_t n);

/// Σ_{odd m <= n} σ₁(m) q^m.
QSeries sigma1_series(std::int64_t n);

/// Multiplies the coefficient of q^n by 0 when p | n.
QSeries twist(const QSeries& f, std::int64_t p);

/// a(n) = #{x ∈ Z^4 : x G xᵀ = n} for n <= N, by box enumeration with |x_i| bounded by
/// sqrt(N (G⁻¹)_ii). Throws std::invalid_argument if G is not 4×4 positive definite.
QSeries quaternary_theta(const IntMatrix& g, std::int64_t n);

/// Gram matrix of the lattice {(a,b,c,d) : a ≡ d, b ≡ c (mod 4)} under (a²+11b²+c²+11d²)/4,
/// in the basis (4,0,0,0), (0,4,0,0), (1,0,0,1), (0,1,1,0).
IntMatrix quaternary_gram();

/// η(z)²η(11z)² truncated at n: the b(n).
QSeries b_series(std::int64_t n);

inline constexpr std::int64_t kIdentityBound = 1388;

struct IdentityResult {
    bool holds = false;
    std::optional<std::int64_t> first_mismatch;
};

/// Checks 5·a(n) = 4·(σ₁(n) − b(n)) for every 1 <= n <= bound with gcd(n, 22) = 1 and that
/// both sides vanish otherwise, i.e. the χ₂χ₁₁ twists of θ_L and (4/5)(η(4z)⁸/η(2z)⁴ −
/// η(z)²η(11z)²) agree up to q^bound.
IdentityResult identity_check(std::int64_t bound = kIdentityBound);

/// Same check against caller-supplied series (fault injection).
IdentityResult identity_check(const QSeries& theta, const QSeries& b, std::int64_t bound);

/// (4/5)(p + 1 − b(p)) for an odd prime p != 11; DivisibilityError if 5 does not divide
/// 4(p + 1 − b(p)).
Integer a_p_formula(std::int64_t p);

/// b(p)² < 4p for every prime p <= limit.
bool ramanujan_check(std::int64_t limit);

bool is_prime(std::int64_t n);

}  // namespace oddleech
