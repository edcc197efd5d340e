#include "oddleech/lattice_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oddleech/errors.hpp"
#include "oddleech/linalg.hpp"
#include "oddleech/parallel.hpp"

namespace oddleech {

namespace {

struct Subtree {
    std::map<std::int64_t, std::uint64_t> counts;
    std::vector<std::vector<std::int64_t>> coords;
};

class Enumerator {
 public:
    Enumerator(const IntMatrix& gram, std::int64_t bound) : n_(gram.rows()), bound_(bound), g_(gram.to_int64_rows()) {
        // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
        q_.assign(n_, std::vector<double>(n_, 0.0));
        for (std::size_t i = 0; i < n_; ++i) {
            double diag = static_cast<double>(g_[i][i]);
            for (std::size_t l = 0; l < i; ++l) diag -= q_[l][l] * q_[l][i] * q_[l][i];
            if (!(diag > 0.0)) throw std::invalid_argument("enumeration: Gram matrix is not positive definite");
            q_[i][i] = diag;
            for (std::size_t j = i + 1; j < n_; ++j) {
                double v = static_cast<double>(g_[i][j]);
                for (std::size_t l = 0; l < i; ++l) v -= q_[l][l] * q_[l][i] * q_[l][j];
                q_[i][j] = v / diag;
            }
        }
        radius_ = static_cast<double>(bound_) + 0.5;
    }

    std::size_t dim() const { return n_; }

    /// Integer range of the last coordinate.
    std::pair<std::int64_t, std::int64_t> top_range() const {
        const double w = std::sqrt(radius_ / q_[n_ - 1][n_ - 1]);
        return {static_cast<std::int64_t>(std::ceil(-w)), static_cast<std::int64_t>(std::floor(w))};
    }

    Subtree run(std::int64_t top, bool want) const {
        Subtree out;
        std::vector<std::int64_t> x(n_, 0);
        std::vector<double> rem(n_ + 1, 0.0);  // rem[i]: budget left for levels < i
        std::vector<std::int64_t> hi(n_, 0);
        const std::size_t last = n_ - 1;
        x[last] = top;
        {
            const double y = static_cast<double>(top);
            rem[last] = radius_ - q_[last][last] * y * y;
        }
        if (rem[last] < 0.0) return out;
        if (n_ == 1) {
            record(x, out, want);
            return out;
        }
        // descend to level last - 1
        std::size_t i = last - 1;
        init_level(i, x, rem, hi);
        while (true) {
            if (x[i] > hi[i]) {
                if (++i == last) break;
                ++x[i];
                continue;
            }
            const double c = center(i, x);
            const double y = static_cast<double>(x[i]) - c;
            const double left = rem[i + 1] - q_[i][i] * y * y;
            if (left < 0.0) {
                ++x[i];
                continue;
            }
            rem[i] = left;
            if (i == 0) {
                record(x, out, want);
                ++x[i];
                continue;
            }
            --i;
            init_level(i, x, rem, hi);
        }
        return out;
    }

 private:
    double center(std::size_t i, const std::vector<std::int64_t>& x) const {
        double c = 0.0;
        for (std::size_t j = i + 1; j < n_; ++j) c -= q_[i][j] * static_cast<double>(x[j]);
        return c;
    }

    void init_level(std::size_t i, std::vector<std::int64_t>& x, const std::vector<double>& rem,
                    std::vector<std::int64_t>& hi) const {
        const double c = center(i, x);
        const double w = std::sqrt(std::max(0.0, rem[i + 1]) / q_[i][i]);
        x[i] = static_cast<std::int64_t>(std::ceil(c - w));
        hi[i] = static_cast<std::int64_t>(std::floor(c + w));
    }

    void record(const std::vector<std::int64_t>& x, Subtree& out, bool want) const {
        __int128 norm = 0;
        for (std::size_t a = 0; a < n_; ++a) {
            if (x[a] == 0) continue;
            __int128 row = 0;
            for (std::size_t b = 0; b < n_; ++b) row += static_cast<__int128>(g_[a][b]) * x[b];
            norm += row * x[a];
        }
        if (norm <= 0 || norm > bound_) return;
        ++out.counts[static_cast<std::int64_t>(norm)];
        if (want) out.coords.push_back(x);
    }

    std::size_t n_;
    std::int64_t bound_;
    std::vector<std::vector<std::int64_t>> g_;
    std::vector<std::vector<double>> q_;
    double radius_ = 0.0;
};

}  // namespace

ShortVectorReport enumerate_gram(const IntMatrix& gram, std::int64_t bound, bool want_witnesses) {
    if (bound < 1) throw std::invalid_argument("short vector bound must be at least 1");
    if (gram.rows() == 0) return {bound, {}, {}};
    const Enumerator en(gram, bound);
    const auto [lo, hi] = en.top_range();
    const std::size_t slots = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Subtree> parts(slots);
    parallel_for(slots, [&](std::size_t s) { parts[s] = en.run(lo + static_cast<std::int64_t>(s), want_witnesses); });

    ShortVectorReport report;
    report.norm_bound = bound;
    for (auto& part : parts) {
        for (const auto& [norm, count] : part.counts) report.counts_by_norm[norm] += count;
        for (const auto& c : part.coords) {
            IntVector v;
            v.reserve(c.size());
            for (std::int64_t x : c) v.emplace_back(static_cast<long>(x));
            report.witnesses.push_back(std::move(v));
        }
    }
    return report;
}

bool is_unimodular(const LatticeRep& lattice) {
    return lattice.gram_scaled.square() && lattice.gram_scaled.rows() == lattice.dim() &&
           det(lattice.gram_scaled) == 1;
}

bool is_even(const LatticeRep& lattice) {
    for (std::size_t i = 0; i < lattice.gram_scaled.rows(); ++i) {
        if (!divides(Integer(2), lattice.gram_scaled(i, i))) return false;
    }
    return true;
}

namespace {

ShortVectorReport reduced_enumeration(const LatticeRep& lattice, std::int64_t bound, bool want_witnesses) {
    const LllResult reduced = lll_reduce(lattice.basis, LllDelta{99, 100});
    const IntMatrix g = gram(reduced.basis, Integer(static_cast<long>(lattice.scale)));
    ShortVectorReport report = enumerate_gram(g, bound, want_witnesses);
    if (want_witnesses) {
        for (auto& w : report.witnesses) w = row_times(w, reduced.basis);
        std::sort(report.witnesses.begin(), report.witnesses.end());
    }
    return report;
}

}  // namespace

ShortVectorReport short_vectors(const LatticeRep& lattice, std::int64_t bound, bool want_witnesses) {
    if (bound < 1) throw std::invalid_argument("short_vectors: bound must be at least 1");
    if (lattice.dim() > 4 && bound > kShortVectorBoundGuard) {
        throw GuardExceeded("short_vectors: bound " + std::to_string(bound) + " exceeds the guard " +
                            std::to_string(kShortVectorBoundGuard) + " for dimension " +
                            std::to_string(lattice.dim()));
    }
    return reduced_enumeration(lattice, bound, want_witnesses);
}

std::int64_t min_norm(const LatticeRep& lattice) {
    if (lattice.dim() == 0) throw std::invalid_argument("min_norm: zero-dimensional lattice");
    for (std::int64_t bound = 1;; ++bound) {
        const ShortVectorReport r = reduced_enumeration(lattice, bound, false);
        if (!r.counts_by_norm.empty()) return r.counts_by_norm.begin()->first;
    }
}

std::vector<std::uint64_t> theta_coeffs(const LatticeRep& lattice, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("theta_coeffs: N must be non-negative");
    if (lattice.dim() > 4 && n > kThetaGuard) {
        throw GuardExceeded("theta_coeffs: N " + std::to_string(n) + " exceeds the guard " +
                            std::to_string(kThetaGuard));
    }
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    if (n == 0) return a;
    const ShortVectorReport r = reduced_enumeration(lattice, n, false);
    for (const auto& [norm, count] : r.counts_by_norm) a[static_cast<std::size_t>(norm)] = count;
    return a;
}

std::vector<std::uint64_t> theta_coeffs(const IntMatrix& gram_matrix, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("theta_coeffs: N must be non-negative");
    if (gram_matrix.rows() > 4 && n > kThetaGuard) {
        throw GuardExceeded("theta_coeffs: N " + std::to_string(n) + " exceeds the guard " +
                            std::to_string(kThetaGuard));
    }
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    if (n == 0) return a;
    const ShortVectorReport r = enumerate_gram(gram_matrix, n, false);
    for (const auto& [norm, count] : r.counts_by_norm) a[static_cast<std::size_t>(norm)] = count;
    return a;
}

}  // namespace oddleech
