#include <random>

#include "doctest.h"

#include "oddleech/codes.hpp"
#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"
#include "test_util.hpp"

using namespace oddleech;

namespace {

// Cofactor expansion along the first row; independent of the Bareiss path.
Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != col) minor(i - 1, jj++) = m(i, j);
        const Integer term = m(0, col) * laplace_det(minor);
        total += (col % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

// Exact Gram-Schmidt with rationals: checks size reduction and the Lovász condition.
bool is_lll_reduced(const IntMatrix& b, const mpq_class& delta) {
    const std::size_t n = b.rows();
    std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(b.cols()));
    std::vector<mpq_class> norms(n);
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < b.cols(); ++c) star[i][c] = mpq_class(b(i, c));
        for (std::size_t j = 0; j < i; ++j) {
            mpq_class ip = 0;
            for (std::size_t c = 0; c < b.cols(); ++c) ip += mpq_class(b(i, c)) * star[j][c];
            mu[i][j] = ip / norms[j];
            for (std::size_t c = 0; c < b.cols(); ++c) star[i][c] -= mu[i][j] * star[j][c];
        }
        norms[i] = 0;
        for (const auto& x : star[i]) norms[i] += x * x;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(mu[i][j]) > mpq_class(1, 2)) return false;
    for (std::size_t i = 1; i < n; ++i) {
        if (norms[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) return false;
    }
    return true;
}

IntMatrix d4_stack() {
    return vstack(code_d4().generator(), IntMatrix::identity(24).scaled(4));
}

}  // namespace

TEST_CASE("hnf of a matrix already in normal form") {
    const IntMatrix m{{2, 0}, {0, 2}};
    const HnfResult h = hnf(m);
    CHECK(h.rank == 2);
    CHECK(h.basis == m);
}

TEST_CASE("hnf of I_24 stacked over 4·I_24 is I_24") {
    const HnfResult h = hnf(vstack(IntMatrix::identity(24), IntMatrix::identity(24).scaled(4)));
    CHECK(h.rank == 24);
    CHECK(h.basis == IntMatrix::identity(24));
}

TEST_CASE("hnf of the D stack has determinant 4^12") {
    const HnfResult h = hnf(d4_stack());
    REQUIRE(h.rank == 24);
    Integer diag = 1;
    for (std::size_t i = 0; i < 24; ++i) diag *= h.basis(i, i);
    CHECK(diag == Integer(1) << 24);
    CHECK(det(h.basis) == diag);
}

TEST_CASE("hnf shape, idempotence and row span") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m(6, 5);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = entry(rng);
        const HnfResult h = hnf(m);
        std::size_t last_pivot = 0;
        for (std::size_t r = 0; r < h.rank; ++r) {
            std::size_t p = 0;
            while (h.basis(r, p) == 0) ++p;
            if (r > 0) CHECK(p > last_pivot);
            last_pivot = p;
            CHECK(h.basis(r, p) > 0);
            for (std::size_t above = 0; above < r; ++above) {
                CHECK(h.basis(above, p) >= 0);
                CHECK(h.basis(above, p) < h.basis(r, p));
            }
        }
        CHECK(hnf(h.basis).basis == h.basis);
        // adding the original rows to the span changes nothing
        CHECK(hnf(vstack(h.basis, m)).basis == h.basis);
        // and the rows of H are combinations of M: hnf(M) == hnf(U·M) for unimodular U
        CHECK(hnf(testing::random_unimodular(6, rng) * m).basis == h.basis);
    }
}

TEST_CASE("det examples") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix{{4, 0, 1, 0}, {0, 44, 0, 11}, {1, 0, 3, 0}, {0, 11, 0, 3}}) == 121);
    const IntMatrix s = mckay_s();
    CHECK(s * s.transpose() == IntMatrix::identity(12).scaled(11));
    Integer e6;
    mpz_pow_ui(e6.get_mpz_t(), Integer(11).get_mpz_t(), 6);
    CHECK(abs(det(s)) == e6);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
            if (trial == 0 && n > 1) m.set_row(n - 1, m.row_vector(0));  // singular case
            CHECK(det(m) == laplace_det(m));
        }
    }
}

TEST_CASE("lll of the identity is the identity") {
    const LllResult r = lll_reduce(IntMatrix::identity(4));
    CHECK(r.basis == IntMatrix::identity(4));
    CHECK(r.transform == IntMatrix::identity(4));
}

TEST_CASE("lll recovers an orthonormal basis of a scrambled Z^4") {
    const IntMatrix u0{{1, 2, 0, -1}, {3, 7, 1, -2}, {0, 1, 1, 0}, {2, 5, 2, 0}};
    REQUIRE(abs(det(u0)) == 1);
    const LllResult r = lll_reduce(u0);
    CHECK(r.basis == r.transform * u0);
    const IntMatrix g = r.basis * r.basis.transpose();
    CHECK(g == IntMatrix::identity(4));
}

TEST_CASE("lll on the D stack keeps the determinant and the lattice") {
    const IntMatrix b = hnf(d4_stack()).basis;
    const LllResult r = lll_reduce(b);
    CHECK(abs(det(r.basis)) == abs(det(b)));
    CHECK(abs(det(r.transform)) == 1);
    CHECK(r.basis == r.transform * b);
    CHECK(hnf(r.basis).basis == hnf(b).basis);
    CHECK(is_lll_reduced(r.basis, mpq_class(3, 4)));
}

TEST_CASE("lll output satisfies the reduction conditions on random bases") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-50, 50);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
        IntMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
        if (det(b) == 0) continue;
        const LllResult r = lll_reduce(b);
        CHECK(r.basis == r.transform * b);
        CHECK(abs(det(r.transform)) == 1);
        CHECK(hnf(r.basis).basis == hnf(b).basis);
        CHECK(is_lll_reduced(r.basis, mpq_class(3, 4)));
        const LllResult strong = lll_reduce(b, LllDelta{99, 100});
        CHECK(is_lll_reduced(strong.basis, mpq_class(99, 100)));
    }
}

TEST_CASE("lll rejects dependent rows") {
    CHECK_THROWS_AS(lll_reduce(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(lll_reduce(IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("gram divides exactly or reports the failure") {
    CHECK(gram(IntMatrix::identity(4).scaled(2), Integer(4)) == IntMatrix::identity(4));
    CHECK_THROWS_AS(gram(IntMatrix::identity(2), Integer(4)), DivisibilityError);
}

TEST_CASE("gram of the D stack basis is unimodular and positive definite") {
    const IntMatrix g = gram(hnf(d4_stack()).basis, Integer(4));
    CHECK(g.is_symmetric());
    CHECK(det(g) == 1);
    CHECK(is_positive_definite(g));
}

TEST_CASE("gram of the C11 stack basis is unimodular") {
    const ZkCode c = code_c11();
    const IntMatrix b = hnf(vstack(c.generator(), IntMatrix::identity(24).scaled(11))).basis;
    const IntMatrix g = gram(b, Integer(11));
    CHECK(g.is_symmetric());
    CHECK(det(g) == 1);
}

TEST_CASE("positive definiteness by leading minors") {
    CHECK(is_positive_definite(IntMatrix{{2, 1}, {1, 2}}));
    CHECK_FALSE(is_positive_definite(IntMatrix{{1, 2}, {2, 1}}));
    CHECK_FALSE(is_positive_definite(IntMatrix{{1, 0}, {1, 1}}));
}
