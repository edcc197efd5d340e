#include "oddleech/qseries.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"

namespace oddleech {

namespace {

std::int64_t floor_div24(std::int64_t v) { return v >= 0 ? v / 24 : -((-v + 23) / 24); }

// number of stored coefficients for exponents offset24/24 + i <= precision
std::size_t slot_count(std::int64_t precision, std::int64_t offset24) {
    const std::int64_t span = 24 * precision - offset24;
    return span < 0 ? 0 : static_cast<std::size_t>(span / 24 + 1);
}

// ∏_{n>=1} (1 - q^{m n}) up to q^limit
std::vector<Integer> euler_product(std::int64_t m, std::int64_t limit) {
    std::vector<Integer> c(static_cast<std::size_t>(limit + 1), Integer(0));
    c[0] = 1;
    for (std::int64_t step = m; step <= limit; step += m) {
        for (std::int64_t i = limit; i >= step; --i) {
            const auto idx = static_cast<std::size_t>(i);
            c[idx] -= c[idx - static_cast<std::size_t>(step)];
        }
    }
    return c;
}

}  // namespace

QSeries::QSeries(std::int64_t precision, std::int64_t offset24, std::vector<Integer> coeffs)
    : precision_(precision), offset24_(offset24), coeffs_(std::move(coeffs)) {
    coeffs_.resize(slot_count(precision_, offset24_), Integer(0));
}

QSeries QSeries::from_coefficients(std::vector<Integer> coeffs) {
    const auto precision = static_cast<std::int64_t>(coeffs.size()) - 1;
    return QSeries(precision, 0, std::move(coeffs));
}

Integer QSeries::coefficient(std::int64_t n) const {
    if (!integral_exponents()) throw std::logic_error("coefficient: series has fractional exponents");
    if (n > precision_) throw std::out_of_range("coefficient: q^" + std::to_string(n) + " beyond precision");
    const std::int64_t idx = n - offset24_ / 24;
    if (idx < 0) return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

void QSeries::set_coefficient(std::int64_t n, const Integer& value) {
    if (!integral_exponents()) throw std::logic_error("set_coefficient: series has fractional exponents");
    const std::int64_t idx = n - offset24_ / 24;
    if (idx < 0 || n > precision_) throw std::out_of_range("set_coefficient: exponent out of range");
    coeffs_[static_cast<std::size_t>(idx)] = value;
}

bool QSeries::operator==(const QSeries& rhs) const {
    if (precision_ != rhs.precision_) return false;
    if (mod_floor(offset24_ - rhs.offset24_, 24) != 0) return false;
    // walk both in steps of 24/24 from the smaller leading exponent
    const std::int64_t start = std::min(offset24_, rhs.offset24_);
    for (std::int64_t e = start; e <= 24 * precision_; e += 24) {
        auto at = [e](const QSeries& s) -> Integer {
            const std::int64_t idx = (e - s.offset24_) / 24;
            if (e < s.offset24_ || idx >= static_cast<std::int64_t>(s.coeffs_.size())) return 0;
            return s.coeffs_[static_cast<std::size_t>(idx)];
        };
        if (at(*this) != at(rhs)) return false;
    }
    return true;
}

QSeries QSeries::operator*(const QSeries& rhs) const {
    const std::int64_t known24 = std::min(24 * precision_ + rhs.offset24_, 24 * rhs.precision_ + offset24_);
    const std::int64_t offset = offset24_ + rhs.offset24_;
    const std::int64_t precision = floor_div24(known24);
    std::vector<Integer> out(slot_count(precision, offset), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size() && i < out.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < out.size(); ++j) {
            if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QSeries(precision, offset, std::move(out));
}

QSeries QSeries::operator-(const QSeries& rhs) const {
    if (offset24_ != rhs.offset24_) throw std::invalid_argument("series difference: offsets differ");
    const std::int64_t precision = std::min(precision_, rhs.precision_);
    std::vector<Integer> out(slot_count(precision, offset24_), Integer(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] - rhs.coeffs_[i];
    return QSeries(precision, offset24_, std::move(out));
}

QSeries QSeries::inverse() const {
    if (offset24_ != 0 || coeffs_.empty() || abs(coeffs_[0]) != 1) {
        throw std::invalid_argument("inverse: constant term must be ±1 at offset 0");
    }
    const Integer& c0 = coeffs_[0];
    std::vector<Integer> g(coeffs_.size(), Integer(0));
    g[0] = c0;
    for (std::size_t n = 1; n < g.size(); ++n) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (coeffs_[i] != 0) acc += coeffs_[i] * g[n - i];
        }
        g[n] = -c0 * acc;
    }
    return QSeries(precision_, 0, std::move(g));
}

QSeries QSeries::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries result(precision_, 0, {Integer(1)});
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string QSeries::to_sparse_text() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        if (integral_exponents()) {
            os << offset24_ / 24 + static_cast<std::int64_t>(i);
        } else {
            os << offset24_ + 24 * static_cast<std::int64_t>(i) << "/24";
        }
        os << ':' << coeffs_[i];
    }
    return os.str();
}

QSeries eta_product(std::span<const EtaFactor> factors, std::int64_t n) {
    std::int64_t offset24 = 0;
    for (const auto& f : factors) {
        if (f.arg_multiple < 1) throw std::invalid_argument("eta_product: argument multiple must be positive");
        offset24 += f.arg_multiple * f.exponent;
    }
    if (offset24 % 24 != 0) {
        throw std::invalid_argument("eta_product: total offset " + std::to_string(offset24) +
                                    "/24 is not an integer exponent");
    }
    const std::int64_t limit = n - offset24 / 24;
    if (limit < 0) return QSeries(n, offset24, {});
    QSeries product(limit, 0, {Integer(1)});
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        product = product * QSeries(limit, 0, euler_product(f.arg_multiple, limit)).pow(f.exponent);
    }
    return QSeries(n, offset24, product.coeffs());
}

Integer sigma1(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sigma1: argument must be positive");
    Integer s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += static_cast<long>(d);
        if (d * d != n) s += static_cast<long>(n / d);
    }
    return s;
}

QSeries sigma1_series(std::int64_t n) {
    std::vector<Integer> c(static_cast<std::size_t>(std::max<std::int64_t>(n, 0) + 1), Integer(0));
    for (std::int64_t m = 1; m <= n; m += 2) c[static_cast<std::size_t>(m)] = sigma1(m);
    return QSeries(n, 0, std::move(c));
}

QSeries twist(const QSeries& f, std::int64_t p) {
    if (!f.integral_exponents()) throw std::invalid_argument("twist: series has fractional exponents");
    if (p < 1) throw std::invalid_argument("twist: modulus must be positive");
    std::vector<Integer> c = f.coeffs();
    const std::int64_t lead = f.offset24() / 24;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if ((lead + static_cast<std::int64_t>(i)) % p == 0) c[i] = 0;
    }
    return QSeries(f.precision(), f.offset24(), std::move(c));
}

IntMatrix quaternary_gram() {
    return IntMatrix{{4, 0, 1, 0}, {0, 44, 0, 11}, {1, 0, 3, 0}, {0, 11, 0, 3}};
}

QSeries quaternary_theta(const IntMatrix& g, std::int64_t n) {
    if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("quaternary_theta: Gram must be 4×4");
    if (!is_positive_definite(g)) throw std::invalid_argument("quaternary_theta: Gram is not positive definite");
    if (n < 0) throw std::invalid_argument("quaternary_theta: N must be non-negative");
    const Integer d = det(g);
    std::array<std::int64_t, 4> box{};
    for (std::size_t i = 0; i < 4; ++i) {
        IntMatrix minor(3, 3);
        for (std::size_t r = 0, rr = 0; r < 4; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0, cc = 0; c < 4; ++c) {
                if (c == i) continue;
                minor(rr, cc++) = g(r, c);
            }
            ++rr;
        }
        // (G⁻¹)_ii = cofactor_ii / det
        const Integer limit = Integer(static_cast<long>(n)) * det(minor) / d;
        box[i] = isqrt(to_int64(limit));
    }
    const auto q = g.to_int64_rows();
    std::vector<Integer> a(static_cast<std::size_t>(n) + 1, Integer(0));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::array<std::int64_t, 4> x{};
    for (x[0] = -box[0]; x[0] <= box[0]; ++x[0]) {
        for (x[1] = -box[1]; x[1] <= box[1]; ++x[1]) {
            for (x[2] = -box[2]; x[2] <= box[2]; ++x[2]) {
                for (x[3] = -box[3]; x[3] <= box[3]; ++x[3]) {
                    std::int64_t v = 0;
                    for (std::size_t i = 0; i < 4; ++i) {
                        if (x[i] == 0) continue;
                        std::int64_t row = 0;
                        for (std::size_t j = 0; j < 4; ++j) row += q[i][j] * x[j];
                        v += row * x[i];
                    }
                    if (v <= n) ++counts[static_cast<std::size_t>(v)];
                }
            }
        }
    }
    for (std::size_t i = 0; i < counts.size(); ++i) a[i] = static_cast<unsigned long>(counts[i]);
    return QSeries(n, 0, std::move(a));
}

QSeries b_series(std::int64_t n) {
    const EtaFactor factors[] = {{1, 2}, {11, 2}};
    return eta_product(factors, n);
}

IdentityResult identity_check(const QSeries& theta, const QSeries& b, std::int64_t bound) {
    if (theta.precision() < bound || b.precision() < bound) {
        throw std::invalid_argument("identity_check: series precision below the bound");
    }
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (std::gcd(n, std::int64_t{22}) != 1) continue;
        const Integer lhs = 5 * theta.coefficient(n);
        const Integer rhs = 4 * (sigma1(n) - b.coefficient(n));
        if (lhs != rhs) return {false, n};
    }
    return {true, std::nullopt};
}

IdentityResult identity_check(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("identity_check: bound must be positive");
    return identity_check(quaternary_theta(quaternary_gram(), bound), b_series(bound), bound);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer a_p_formula(std::int64_t p) {
    if (p < 3 || p == 11 || !is_prime(p)) {
        throw std::invalid_argument("a_p_formula: p must be an odd prime other than 11");
    }
    const Integer value = 4 * (Integer(static_cast<long>(p + 1)) - b_series(p).coefficient(p));
    if (!divides(Integer(5), value)) {
        throw DivisibilityError("a_p_formula: 4(p+1-b(p)) = " + value.get_str() + " is not divisible by 5");
    }
    return value / 5;
}

bool ramanujan_check(std::int64_t limit) {
    if (limit < 2) return true;
    const QSeries b = b_series(limit);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        const Integer bp = b.coefficient(p);
        if (bp * bp >= 4 * p) return false;
    }
    return true;
}

}  // namespace oddleech
