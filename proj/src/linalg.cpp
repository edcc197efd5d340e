#include "oddleech/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "oddleech/errors.hpp"

namespace oddleech {

namespace {

// row_i <- row_i - q * row_r
void subtract_multiple(IntMatrix& m, std::size_t i, std::size_t r, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c) != 0) m(i, c) -= q * m(r, c);
    }
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// nearest integer to a/b for b > 0, ties rounded up
Integer round_div(const Integer& a, const Integer& b) { return floor_div(2 * a + b, 2 * b); }

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            if (h(r, c) == 0) {
                h.swap_rows(r, i);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
            const Integer a = h(r, c) / g;
            const Integer b = h(i, c) / g;
            // [s t; -b a] has determinant 1
            for (std::size_t j = c; j < cols; ++j) {
                const Integer x = h(r, j);
                const Integer y = h(i, j);
                h(r, j) = s * x + t * y;
                h(i, j) = a * y - b * x;
            }
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            for (std::size_t j = c; j < cols; ++j) h(r, j) = -h(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) subtract_multiple(h, i, r, floor_div(h(i, c), h(r, c)));
        ++r;
    }
    return {h.row_block(0, r), r};
}

Integer det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

LllResult lll_reduce(const IntMatrix& input, LllDelta delta) {
    if (!(4 * delta.num > delta.den && delta.num <= delta.den && delta.den > 0)) {
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1]");
    }
    const std::size_t n = input.rows();
    IntMatrix b = input;
    IntMatrix h = IntMatrix::identity(n);
    if (n == 0) return {b, h};

    // 1-based bookkeeping: d[0] = 1, d[i] = Gram determinant of the first i vectors,
    // lam[k][j] = d[j] * mu_{k,j}; vector i lives in row i - 1.
    std::vector<Integer> d(n + 1, Integer(0));
    std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, Integer(0)));
    auto inner = [&](std::size_t i, std::size_t j) { return dot(b.row(i - 1), b.row(j - 1)); };
    auto dependent = [] { return std::invalid_argument("lll_reduce: rows are linearly dependent"); };

    auto red = [&](std::size_t k, std::size_t l) {
        if (abs(2 * lam[k][l]) <= d[l]) return;
        const Integer q = round_div(lam[k][l], d[l]);
        subtract_multiple(b, k - 1, l - 1, q);
        subtract_multiple(h, k - 1, l - 1, q);
        lam[k][l] -= q * d[l];
        for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    std::size_t kmax = 1;
    d[0] = 1;
    d[1] = inner(1, 1);
    if (d[1] == 0) throw dependent();

    auto swap_step = [&](std::size_t k, std::size_t kmax_now) {
        b.swap_rows(k - 1, k - 2);
        h.swap_rows(k - 1, k - 2);
        for (std::size_t j = 1; j + 1 < k; ++j) lam[k][j].swap(lam[k - 1][j]);
        const Integer l = lam[k][k - 1];
        const Integer bb = (d[k - 2] * d[k] + l * l) / d[k - 1];
        for (std::size_t i = k + 1; i <= kmax_now; ++i) {
            const Integer t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
            lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k];
        }
        d[k - 1] = bb;
    };

    std::size_t k = 2;
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                Integer u = inner(k, j);
                for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k) {
                    lam[k][j] = u;
                } else {
                    if (u == 0) throw dependent();
                    d[k] = u;
                }
            }
        }
        red(k, k - 1);
        const Integer lhs = delta.den * d[k] * d[k - 2];
        const Integer rhs = delta.num * d[k - 1] * d[k - 1] - delta.den * lam[k][k - 1] * lam[k][k - 1];
        if (lhs < rhs) {
            swap_step(k, kmax);
            if (k > 2) --k;
            continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) red(k, l);
        ++k;
    }
    return {b, h};
}

IntMatrix gram(const IntMatrix& b, const Integer& scale) {
    if (scale <= 0) throw std::invalid_argument("gram: scale must be positive");
    IntMatrix g = b * b.transpose();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (!divides(scale, g(i, j))) {
                throw DivisibilityError("gram: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") = " + g(i, j).get_str() + " not divisible by " + scale.get_str());
            }
            mpz_divexact(g(i, j).get_mpz_t(), g(i, j).get_mpz_t(), scale.get_mpz_t());
        }
    }
    return g;
}

bool is_positive_definite(const IntMatrix& g) {
    if (!g.is_symmetric()) return false;
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
        if (det(minor) <= 0) return false;
    }
    return true;
}

}  // namespace oddleech
