#include "oddleech/frames.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"

namespace oddleech {

std::string_view ambient_name(Ambient ambient) { return ambient == Ambient::D4 ? "D4" : "C11"; }

std::optional<Ambient> parse_ambient(std::string_view name) {
    if (name == "D4") return Ambient::D4;
    if (name == "C11") return Ambient::C11;
    return std::nullopt;
}

std::int64_t ambient_scale(Ambient ambient) { return ambient == Ambient::D4 ? 4 : 11; }

const ZkCode& ambient_code(Ambient ambient) {
    static const ZkCode d4 = code_d4();
    static const ZkCode c11 = code_c11();
    return ambient == Ambient::D4 ? d4 : c11;
}

const LatticeRep& ambient_lattice(Ambient ambient) {
    static const LatticeRep d4 = construction_a(ambient_code(Ambient::D4));
    static const LatticeRep c11 = construction_a(ambient_code(Ambient::C11));
    return ambient == Ambient::D4 ? d4 : c11;
}

namespace {

std::int64_t ceil_sqrt(double v) { return static_cast<std::int64_t>(std::ceil(std::sqrt(std::max(0.0, v)))); }

std::int64_t frame_scale(const FrameCertificate& f) { return ambient_scale(f.ambient); }

void require_verified(const FrameCertificate& f, const char* where) {
    const FrameChecks checks = check_frame(f);
    if (!checks.gram_ok) throw VerificationError(std::string(where) + ": Gram matrix is not s·k·I");
    if (!checks.membership_ok) throw VerificationError(std::string(where) + ": vector outside the ambient lattice");
}

}  // namespace

std::optional<QuaternaryRep> represent_quaternary(std::int64_t k) {
    if (k < 1) return std::nullopt;
    const std::int64_t target = 4 * k;
    const std::int64_t ac = ceil_sqrt(static_cast<double>(target));
    const std::int64_t bd = ceil_sqrt(static_cast<double>(target) / 11.0);
    for (std::int64_t a = ac; a >= -ac; --a) {
        const std::int64_t ra = target - a * a;
        if (ra < 0) continue;
        for (std::int64_t b = bd; b >= -bd; --b) {
            const std::int64_t rb = ra - 11 * b * b;
            if (rb < 0) continue;
            for (std::int64_t c = ac; c >= -ac; --c) {
                if (mod_floor(b - c, 4) != 0) continue;
                const std::int64_t rc = rb - c * c;
                if (rc < 0 || rc % 11 != 0) continue;
                std::int64_t root = 0;
                if (!is_square(rc / 11, root)) continue;
                for (std::int64_t d : {root, -root}) {
                    if (mod_floor(a - d, 4) == 0) return QuaternaryRep{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

IntMatrix p_matrix(const QuaternaryRep& r) {
    if (!r.valid()) throw std::invalid_argument("p_matrix: requires a ≡ d and b ≡ c (mod 4)");
    const IntMatrix s = mckay_s();
    const IntMatrix id = IntMatrix::identity(12);
    auto lin = [&](std::int64_t x, std::int64_t y) { return id.scaled(from_int64(x)) + s.scaled(from_int64(y)); };
    const IntMatrix top = hstack(lin(r.a, r.b), lin(r.c, r.d));
    const IntMatrix bottom = hstack(lin(-r.c, r.d), lin(r.a, -r.b));
    return vstack(top, bottom);
}

FrameCertificate frame_from_representation(const QuaternaryRep& r) {
    const IntMatrix p = p_matrix(r);
    FrameCertificate f;
    f.k = r.value() / 4;
    f.ambient = Ambient::D4;
    f.vectors.reserve(kFrameDim);
    for (std::size_t i = 0; i < kFrameDim; ++i) f.vectors.push_back(p.row_vector(i));
    f.provenance.push_back({"representation", {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"norm", f.k}}});
    if (f.k < 1) throw std::invalid_argument("frame_from_representation: zero representation");
    require_verified(f, "frame_from_representation");
    return f;
}

FrameCertificate standard_frame_11() {
    FrameCertificate f;
    f.k = 11;
    f.ambient = Ambient::C11;
    for (std::size_t i = 0; i < kFrameDim; ++i) {
        IntVector v(kFrameDim, Integer(0));
        v[i] = 11;
        f.vectors.push_back(std::move(v));
    }
    f.provenance.push_back({"standard_frame_11", {{"norm", 11}}});
    return f;
}

FourSquares four_squares(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("four_squares: m must be positive");
    for (std::int64_t w = isqrt(m); w >= 0; --w) {
        const std::int64_t r1 = m - w * w;
        for (std::int64_t x = std::min(w, isqrt(r1)); x >= 0; --x) {
            const std::int64_t r2 = r1 - x * x;
            for (std::int64_t y = std::min(x, isqrt(r2)); y >= 0; --y) {
                std::int64_t z = 0;
                if (is_square(r2 - y * y, z) && z <= y) return {w, x, y, z};
            }
        }
    }
    throw std::logic_error("four_squares: no decomposition found");
}

IntMatrix quaternion_block(const FourSquares& s) {
    const auto [w, x, y, z] = s;
    return IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{
        {w, x, y, z},
        {-x, w, -z, y},
        {-y, z, w, -x},
        {-z, -y, x, w},
    });
}

FrameCertificate multiply_frame(const FrameCertificate& frame, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("multiply_frame: m must be positive");
    if (!verify_frame(frame)) throw std::invalid_argument("multiply_frame: input certificate is invalid");
    const FourSquares sq = four_squares(m);
    const IntMatrix q = quaternion_block(sq);
    if (!(q * q.transpose()).is_identity_multiple(from_int64(m))) {
        throw VerificationError("multiply_frame: quaternion block is not orthogonal");
    }
    FrameCertificate out;
    out.k = frame.k * m;
    out.ambient = frame.ambient;
    out.provenance = frame.provenance;
    out.provenance.push_back(
        {"multiply", {{"m", m}, {"w", sq.w}, {"x", sq.x}, {"y", sq.y}, {"z", sq.z}, {"norm", out.k}}});
    out.vectors.reserve(kFrameDim);
    for (std::size_t block = 0; block < kFrameDim; block += 4) {
        for (std::size_t i = 0; i < 4; ++i) {
            IntVector v(kFrameDim, Integer(0));
            for (std::size_t j = 0; j < 4; ++j) {
                const Integer& coef = q(i, j);
                if (coef == 0) continue;
                const IntVector& src = frame.vectors[block + j];
                for (std::size_t t = 0; t < kFrameDim; ++t) v[t] += coef * src[t];
            }
            out.vectors.push_back(std::move(v));
        }
    }
    require_verified(out, "multiply_frame");
    return out;
}

std::int64_t fallback_base_norm(std::int64_t k) {
    if (k < 3) throw std::invalid_argument("frame norm must be at least 3, got " + std::to_string(k));
    std::int64_t rest = k;
    while (rest % 2 == 0) rest /= 2;
    for (std::int64_t p = 3; p * p <= rest; p += 2) {
        if (rest % p == 0 && p != 11) return p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1 && rest != 11) return rest;
    if ((k & (k - 1)) == 0) return 4;
    return 11;
}

FrameCertificate build_frame(std::int64_t k) {
    if (k < 3) throw std::invalid_argument("frame norm must be at least 3, got " + std::to_string(k));
    FrameCertificate result;
    if (const auto rep = represent_quaternary(k)) {
        result = frame_from_representation(*rep);
    } else {
        const std::int64_t base = fallback_base_norm(k);
        FrameCertificate seed;
        if (base == 11) {
            seed = standard_frame_11();
        } else {
            const auto base_rep = represent_quaternary(base);
            if (!base_rep) {
                throw VerificationError("build_frame: no quaternary representation of base norm " +
                                        std::to_string(base));
            }
            seed = frame_from_representation(*base_rep);
        }
        result = multiply_frame(seed, k / base);
    }
    require_verified(result, "build_frame");
    return result;
}

FrameChecks check_frame(const FrameCertificate& frame) {
    FrameChecks checks;
    if (frame.vectors.size() != kFrameDim || frame.k < 1) return checks;
    for (const auto& v : frame.vectors) {
        if (v.size() != kFrameDim) return checks;
    }
    const std::int64_t s = frame_scale(frame);
    const Integer expected = from_int64(s) * from_int64(frame.k);
    checks.gram_ok = true;
    for (std::size_t i = 0; i < kFrameDim && checks.gram_ok; ++i) {
        for (std::size_t j = i; j < kFrameDim; ++j) {
            if (dot(frame.vectors[i], frame.vectors[j]) != (i == j ? expected : Integer(0))) {
                checks.gram_ok = false;
                break;
            }
        }
    }
    checks.membership_ok = true;
    const ZkCode& code = ambient_code(frame.ambient);
    for (const auto& v : frame.vectors) {
        if (!orthogonal_to_generator(code, to_codeword(v, s))) {
            checks.membership_ok = false;
            break;
        }
    }
    return checks;
}

bool verify_frame(const FrameCertificate& frame) { return check_frame(frame).ok(); }

ZkCode extract_code(const FrameCertificate& frame) {
    if (frame.k < 3) throw std::invalid_argument("extract_code: frame norm must be at least 3");
    if (frame.vectors.size() != kFrameDim) throw std::invalid_argument("extract_code: expected 24 frame vectors");
    const std::int64_t s = frame_scale(frame);
    const Integer scale = from_int64(s);
    const Integer k = from_int64(frame.k);
    const IntMatrix& basis = ambient_lattice(frame.ambient).basis;
    IntMatrix generator(basis.rows(), kFrameDim);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < kFrameDim; ++j) {
            const Integer ip = dot(basis.row(i), frame.vectors[j]);
            if (!divides(scale, ip)) {
                throw DivisibilityError("extract_code: inner product " + ip.get_str() + " not divisible by scale " +
                                        scale.get_str());
            }
            generator(i, j) = mod_floor(ip / scale, k);
        }
    }
    ZkCode code(frame.k, std::move(generator), "extracted-" + std::to_string(frame.k));
    if (!is_self_dual(code)) throw VerificationError("extract_code: extracted code is not self-dual");
    return code;
}

}  // namespace oddleech
