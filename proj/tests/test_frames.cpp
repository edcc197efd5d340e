#include <random>

#include "doctest.h"

#include "oddleech/construction_a.hpp"
#include "oddleech/errors.hpp"
#include "oddleech/frames.hpp"
#include "oddleech/lattice_analysis.hpp"
#include "oddleech/qseries.hpp"

using namespace oddleech;

namespace {

std::optional<QuaternaryRep> brute_force_greatest(std::int64_t k) {
    std::optional<QuaternaryRep> best;
    const std::int64_t box = 2 * k;
    for (std::int64_t a = -box; a <= box; ++a)
        for (std::int64_t b = -box; b <= box; ++b)
            for (std::int64_t c = -box; c <= box; ++c)
                for (std::int64_t d = -box; d <= box; ++d) {
                    const QuaternaryRep r{a, b, c, d};
                    if (r.value() != 4 * k || !r.valid()) continue;
                    if (!best || std::tie(a, b, c, d) > std::tie(best->a, best->b, best->c, best->d)) best = r;
                }
    return best;
}

QuaternaryRep random_valid_rep(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coord(-40, 40);
    std::uniform_int_distribution<std::int64_t> step(-10, 10);
    const std::int64_t a = coord(rng);
    const std::int64_t b = coord(rng);
    return {a, b, b + 4 * step(rng), a + 4 * step(rng)};
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

TEST_CASE("quaternary representations") {
    CHECK(represent_quaternary(3) == std::optional<QuaternaryRep>(QuaternaryRep{1, 0, 0, 1}));
    CHECK(represent_quaternary(4) == std::optional<QuaternaryRep>(QuaternaryRep{4, 0, 0, 0}));
    CHECK_FALSE(represent_quaternary(11).has_value());
    CHECK_FALSE(represent_quaternary(1).has_value());
    CHECK_FALSE(represent_quaternary(0).has_value());
}

TEST_CASE("representation search returns the lexicographically greatest solution") {
    for (std::int64_t k = 1; k <= 14; ++k) CHECK(represent_quaternary(k) == brute_force_greatest(k));
}

TEST_CASE("a representation exists exactly when the theta coefficient is positive") {
    const QSeries theta = quaternary_theta(quaternary_gram(), 400);
    for (std::int64_t k = 1; k <= 400; ++k) {
        const auto rep = represent_quaternary(k);
        CHECK(rep.has_value() == (theta.coefficient(k) > 0));
        if (rep) {
            CHECK(rep->valid());
            CHECK(rep->value() == 4 * k);
        }
    }
}

TEST_CASE("P matrix examples") {
    CHECK(p_matrix({1, 0, 0, 1}) * p_matrix({1, 0, 0, 1}).transpose() == IntMatrix::identity(24).scaled(12));
    const IntMatrix p4 = p_matrix({4, 0, 0, 0});
    CHECK(p4 == IntMatrix::identity(24).scaled(4));
    CHECK(p4 * p4.transpose() == IntMatrix::identity(24).scaled(16));
    const IntMatrix p6 = p_matrix({1, 1, 1, 1});
    CHECK(p6 * p6.transpose() == IntMatrix::identity(24).scaled(24));
    CHECK_THROWS_AS(p_matrix({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("P·Pᵀ identity and D-membership on random representations") {
    std::mt19937_64 rng(1234);
    const ZkCode& d = ambient_code(Ambient::D4);
    for (int trial = 0; trial < 200; ++trial) {
        const QuaternaryRep r = random_valid_rep(rng);
        const IntMatrix p = p_matrix(r);
        CHECK(p * p.transpose() == IntMatrix::identity(24).scaled(from_int64(r.value())));
        for (std::size_t i = 0; i < 24; ++i) CHECK(membership(d, to_codeword(p.row(i), 4)));
    }
}

TEST_CASE("frames from representations") {
    const FrameCertificate f3 = frame_from_representation({1, 0, 0, 1});
    CHECK(f3.k == 3);
    CHECK(f3.ambient == Ambient::D4);
    CHECK(verify_frame(f3));
    CHECK(frame_from_representation({4, 0, 0, 0}).k == 4);
    const FrameCertificate f6 = frame_from_representation({1, 1, 1, 1});
    CHECK(f6.k == 6);
    CHECK(verify_frame(f6));
}

TEST_CASE("standard 11-frame") {
    const FrameCertificate f = standard_frame_11();
    CHECK(f.k == 11);
    CHECK(f.ambient == Ambient::C11);
    IntVector first(24, Integer(0));
    first[0] = 11;
    CHECK(f.vectors[0] == first);
    const FrameChecks checks = check_frame(f);
    CHECK(checks.gram_ok);
    CHECK(checks.membership_ok);
}

TEST_CASE("four squares") {
    CHECK(four_squares(1) == FourSquares{1, 0, 0, 0});
    CHECK(four_squares(2) == FourSquares{1, 1, 0, 0});
    CHECK(four_squares(7) == FourSquares{2, 1, 1, 1});
    for (std::int64_t m = 1; m <= 3000; ++m) {
        const FourSquares s = four_squares(m);
        CHECK(s.value() == m);
        CHECK(s.w >= s.x);
        CHECK(s.x >= s.y);
        CHECK(s.y >= s.z);
        CHECK(s.z >= 0);
        const IntMatrix q = quaternion_block(s);
        CHECK((q * q.transpose()).is_identity_multiple(from_int64(m)));
    }
    CHECK_THROWS_AS(four_squares(0), std::invalid_argument);
}

TEST_CASE("multiplying frames") {
    const FrameCertificate f3 = frame_from_representation({1, 0, 0, 1});
    CHECK(multiply_frame(f3, 1).vectors == f3.vectors);

    const FrameCertificate f22 = multiply_frame(standard_frame_11(), 2);
    CHECK(f22.k == 22);
    CHECK(verify_frame(f22));
    CHECK(dot(f22.vectors[5], f22.vectors[5]) == 11 * 22);

    const FrameCertificate f15 = multiply_frame(f3, 5);
    CHECK(f15.k == 15);
    CHECK(dot(f15.vectors[0], f15.vectors[0]) == 4 * 15);
    CHECK(verify_frame(f15));

    FrameCertificate broken = f3;
    broken.vectors[0][0] += 1;
    CHECK_THROWS_AS(multiply_frame(broken, 2), std::invalid_argument);
}

TEST_CASE("multiplication composes") {
    for (const auto& [m1, m2] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {5, 7}, {4, 4}, {13, 1}}) {
        for (const FrameCertificate& base : {standard_frame_11(), frame_from_representation({1, 0, 0, 1})}) {
            const FrameCertificate f = multiply_frame(multiply_frame(base, m1), m2);
            CHECK(f.k == base.k * m1 * m2);
            CHECK(verify_frame(f));
        }
    }
}

TEST_CASE("fallback dispatch covers every k >= 3") {
    for (std::int64_t k = 3; k <= 10000; ++k) {
        const std::int64_t base = fallback_base_norm(k);
        CHECK(k % base == 0);
        if (base == 4) {
            CHECK((k & (k - 1)) == 0);
        } else if (base == 11) {
            std::int64_t rest = k;
            while (rest % 2 == 0) rest /= 2;
            while (rest % 11 == 0) rest /= 11;
            CHECK(rest == 1);
        } else {
            CHECK(is_prime(base));
            CHECK(base % 2 == 1);
            CHECK(base != 11);
        }
    }
    CHECK_THROWS_AS(fallback_base_norm(2), std::invalid_argument);
}

TEST_CASE("every odd prime other than 11 below 3000 has a representation") {
    for (std::int64_t p = 3; p < 3000; p += 2) {
        if (!is_prime(p) || p == 11) continue;
        CHECK(represent_quaternary(p).has_value());
    }
}

TEST_CASE("build_frame dispatch") {
    const FrameCertificate f11 = build_frame(11);
    CHECK(f11.ambient == Ambient::C11);
    CHECK(f11.provenance.front().operation == "standard_frame_11");

    const FrameCertificate f22 = build_frame(22);
    CHECK(f22.k == 22);
    CHECK(f22.ambient == Ambient::C11);
    REQUIRE(f22.provenance.size() == 2);
    CHECK(f22.provenance[1].operation == "multiply");
    CHECK(f22.provenance[1].params.at("m") == 2);

    const FrameCertificate f97 = build_frame(97);
    CHECK(f97.ambient == Ambient::D4);
    CHECK(f97.provenance.front().operation == "representation");

    const FrameCertificate f12 = build_frame(12);
    CHECK(f12.ambient == Ambient::D4);
    CHECK(f12.provenance.size() == 1);

    const FrameCertificate f121 = build_frame(121);
    CHECK(f121.provenance.front().operation == "standard_frame_11");
    CHECK(f121.provenance.back().params.at("m") == 11);

    CHECK_THROWS_AS(build_frame(2), std::invalid_argument);
    CHECK_THROWS_AS(build_frame(-5), std::invalid_argument);
}

TEST_CASE("build_frame for k in 3..120") {
    for (std::int64_t k = 3; k <= 120; ++k) {
        const FrameCertificate f = build_frame(k);
        CHECK(f.k == k);
        CHECK(verify_frame(f));
    }
}

TEST_CASE("verification detects tampering") {
    FrameCertificate f = build_frame(7);
    CHECK(verify_frame(f));
    f.vectors[3] = negated(f.vectors[3]);
    CHECK(verify_frame(f));
    f.vectors[0][0] += 1;
    CHECK_FALSE(verify_frame(f));

    FrameCertificate g = build_frame(5);
    g.vectors.pop_back();
    CHECK_FALSE(verify_frame(g));

    // right Gram, wrong lattice: the standard basis of Z^24 scaled by 2 is a 1-frame of Z^24
    FrameCertificate h;
    h.k = 1;
    h.ambient = Ambient::D4;
    for (std::size_t i = 0; i < 24; ++i) {
        IntVector v(24, Integer(0));
        v[i] = 2;
        h.vectors.push_back(v);
    }
    const FrameChecks checks = check_frame(h);
    CHECK(checks.gram_ok);
    CHECK_FALSE(checks.membership_ok);
}

TEST_CASE("extracting codes") {
    const ZkCode c11 = extract_code(standard_frame_11());
    CHECK(c11.modulus() == 11);
    CHECK(c11.length() == 24);
    CHECK(is_self_dual(c11));
    CHECK(code_size(c11) == code_size(code_c11()));

    const ZkCode c3 = extract_code(build_frame(3));
    CHECK(c3.modulus() == 3);
    CHECK(is_self_dual(c3));
    CHECK(min_euclidean_weight(c3) >= 9);

    const ZkCode c4 = extract_code(build_frame(4));
    CHECK(is_self_dual(c4));
    CHECK(min_euclidean_weight(c4) == 12);

    FrameCertificate bad = build_frame(5);
    bad.vectors[0][0] += 1;
    CHECK_THROWS_AS(extract_code(bad), DivisibilityError);
}

TEST_CASE("extracted codes are self-dual on the sampled norms") {
    for (std::int64_t k : {3, 4, 5, 7, 11, 12, 22, 44, 97, 121}) {
        const ZkCode c = extract_code(build_frame(k));
        CHECK(c.modulus() == k);
        CHECK(is_self_dual(c));
    }
}

TEST_CASE("extracted codes rebuild a root-free lattice of minimum 3") {
    for (std::int64_t k : {3, 5, 7, 11}) {
        const LatticeRep rep = construction_a(extract_code(build_frame(k)));
        CHECK(is_unimodular(rep));
        CHECK_FALSE(is_even(rep));
        CHECK(min_norm(rep) == 3);
    }
}
