#include "oddleech/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"
#include "oddleech/parallel.hpp"

namespace oddleech {

ZkCode::ZkCode(std::int64_t modulus, IntMatrix generator, std::string label)
    : modulus_(modulus), generator_(generator.reduced_mod(Integer(static_cast<long>(modulus)))),
      label_(std::move(label)) {
    if (modulus_ < 3) throw std::invalid_argument("ZkCode: modulus must be at least 3");
}

IntMatrix mckay_s() {
    return IntMatrix{
        {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {-1, 0, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1},
        {-1, -1, 0, 1, -1, 1, 1, 1, -1, -1, -1, 1},
        {-1, 1, -1, 0, 1, -1, 1, 1, 1, -1, -1, -1},
        {-1, -1, 1, -1, 0, 1, -1, 1, 1, 1, -1, -1},
        {-1, -1, -1, 1, -1, 0, 1, -1, 1, 1, 1, -1},
        {-1, -1, -1, -1, 1, -1, 0, 1, -1, 1, 1, 1},
        {-1, 1, -1, -1, -1, 1, -1, 0, 1, -1, 1, 1},
        {-1, 1, 1, -1, -1, -1, 1, -1, 0, 1, -1, 1},
        {-1, 1, 1, 1, -1, -1, -1, 1, -1, 0, 1, -1},
        {-1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 0, 1},
        {-1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 0},
    };
}

IntVector c11_seed_row() { return make_vector({2, 2, 2, 10, 4, 9, 7, 1, 1, 1, 1, 1}); }

ZkCode code_c4() {
    const IntMatrix id = IntMatrix::identity(12);
    return ZkCode(4, hstack(id, id.scaled(2) + mckay_s()), "C4");
}

ZkCode code_d4() { return ZkCode(4, hstack(IntMatrix::identity(12), mckay_s()), "D4"); }

ZkCode code_c11() {
    return ZkCode(11, hstack(IntMatrix::identity(12), negacirculant(c11_seed_row(), 11)), "C11");
}

IntMatrix negacirculant(std::span<const Integer> first_row, std::int64_t k) {
    const std::size_t n = first_row.size();
    const Integer modulus(static_cast<long>(k));
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = mod_floor(first_row[j], modulus);
    for (std::size_t i = 1; i < n; ++i) {
        m(i, 0) = mod_floor(-m(i - 1, n - 1), modulus);
        for (std::size_t j = 1; j < n; ++j) m(i, j) = m(i - 1, j - 1);
    }
    return m;
}

Integer code_size(const ZkCode& code) {
    const std::size_t n = code.length();
    const Integer k(static_cast<long>(code.modulus()));
    const HnfResult h = hnf(vstack(code.generator(), IntMatrix::identity(n).scaled(k)));
    Integer index = 1;
    for (std::size_t i = 0; i < n; ++i) index *= h.basis(i, i);
    Integer total;
    mpz_pow_ui(total.get_mpz_t(), k.get_mpz_t(), n);
    return total / index;
}

bool is_self_dual(const ZkCode& code) {
    const std::size_t n = code.length();
    if (n % 2 != 0) throw std::invalid_argument("is_self_dual: odd length " + std::to_string(n) + " cannot be self-dual");
    const Integer k(static_cast<long>(code.modulus()));
    const IntMatrix& g = code.generator();
    const IntMatrix prod = g * g.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!divides(k, prod(i, j))) return false;
    Integer half;
    mpz_pow_ui(half.get_mpz_t(), k.get_mpz_t(), n / 2);
    return code_size(code) == half;
}

std::int64_t euclidean_weight(std::span<const std::int64_t> word, std::int64_t k) {
    std::int64_t w = 0;
    for (std::int64_t x : word) {
        const std::int64_t r = mod_floor(x, k);
        w += std::min(r * r, (k - r) * (k - r));
    }
    return w;
}

bool orthogonal_to_generator(const ZkCode& code, std::span<const std::int64_t> word) {
    if (word.size() != code.length()) throw std::invalid_argument("codeword length mismatch");
    const IntMatrix& g = code.generator();
    const std::int64_t k = code.modulus();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            acc = mod_floor(acc + to_int64(g(i, j)) * mod_floor(word[j], k), k);
        }
        if (acc != 0) return false;
    }
    return true;
}

bool membership(const ZkCode& code, std::span<const std::int64_t> word) {
    if (code.length() % 2 != 0 || !is_self_dual(code)) {
        throw std::invalid_argument("membership: code is not self-dual");
    }
    return orthogonal_to_generator(code, word);
}

std::int64_t min_euclidean_weight(const ZkCode& code) {
    return min_euclidean_weight(code, std::numeric_limits<std::int64_t>::max());
}

std::int64_t min_euclidean_weight(const ZkCode& code, std::int64_t cap) {
    const std::size_t n = code.length();
    const std::int64_t k = code.modulus();
    const Integer kk(static_cast<long>(k));
    const HnfResult h = hnf(vstack(code.generator(), IntMatrix::identity(n).scaled(kk)));

    // Every codeword is uniquely sum_i c_i h_i (mod k) with 0 <= c_i < k / h_ii.
    struct Digit {
        std::vector<std::int64_t> step;   // h_i mod k
        std::vector<std::int64_t> reset;  // -radix * h_i mod k
        std::int64_t radix;
    };
    std::vector<Digit> digits;
    double bits = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t radix = k / to_int64(h.basis(i, i));
        if (radix <= 1) continue;
        Digit d{std::vector<std::int64_t>(n), std::vector<std::int64_t>(n), radix};
        for (std::size_t j = 0; j < n; ++j) {
            d.step[j] = mod_floor(to_int64(h.basis(i, j)), k);
            d.reset[j] = mod_floor(-radix * d.step[j], k);
        }
        digits.push_back(std::move(d));
        bits += std::log2(static_cast<double>(radix));
    }
    if (bits > kEnumerationGuardBits + 1e-9) {
        throw GuardExceeded("min_euclidean_weight: code has 2^" + std::to_string(bits) +
                            " codewords; use the Construction A lattice minimum instead");
    }
    if (digits.empty()) return cap;

    std::vector<std::int64_t> table(static_cast<std::size_t>(k));
    for (std::int64_t r = 0; r < k; ++r) table[static_cast<std::size_t>(r)] = std::min(r * r, (k - r) * (k - r));

    // The most significant digit is split across workers.
    const Digit top = digits.back();
    digits.pop_back();
    std::vector<std::int64_t> best(static_cast<std::size_t>(top.radix), cap);

    parallel_for(static_cast<std::size_t>(top.radix), [&](std::size_t t) {
        std::vector<std::int64_t> word(n, 0);
        for (std::size_t j = 0; j < n; ++j) word[j] = mod_floor(static_cast<std::int64_t>(t) * top.step[j], k);
        std::vector<std::int64_t> counter(digits.size(), 0);
        std::int64_t local = cap;
        const bool skip_zero = t == 0;
        bool first = true;
        while (true) {
            if (!(first && skip_zero)) {
                std::int64_t w = 0;
                for (std::size_t j = 0; j < n && w < local; ++j) w += table[static_cast<std::size_t>(word[j])];
                local = std::min(local, w);
            }
            first = false;
            std::size_t pos = 0;
            while (pos < digits.size()) {
                const Digit& d = digits[pos];
                if (++counter[pos] < d.radix) {
                    for (std::size_t j = 0; j < n; ++j) {
                        word[j] += d.step[j];
                        if (word[j] >= k) word[j] -= k;
                    }
                    break;
                }
                counter[pos] = 0;
                // undo radix-1 steps and move on: word -= (radix - 1) * h_i == word + reset + h_i
                for (std::size_t j = 0; j < n; ++j) word[j] = mod_floor(word[j] + d.reset[j] + d.step[j], k);
                ++pos;
            }
            if (pos == digits.size()) break;
        }
        best[t] = local;
    });
    return *std::min_element(best.begin(), best.end());
}

Codeword to_codeword(std::span<const Integer> v, std::int64_t k) {
    Codeword w(v.size());
    const Integer kk(static_cast<long>(k));
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_int64(mod_floor(v[i], kk));
    return w;
}

}  // namespace oddleech
