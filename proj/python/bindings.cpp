#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddleech/codes.hpp"
#include "oddleech/construction_a.hpp"
#include "oddleech/errors.hpp"
#include "oddleech/frames.hpp"
#include "oddleech/lattice_analysis.hpp"
#include "oddleech/qseries.hpp"
#include "oddleech/serialize.hpp"

namespace py = pybind11;
using namespace oddleech;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

ZkCode named_code(const std::string& id) {
    if (id == "C4") return code_c4();
    if (id == "D4") return code_d4();
    if (id == "C11") return code_c11();
    throw std::invalid_argument("unknown code id " + id);
}

py::dict lattice_summary(const std::string& id, std::optional<std::int64_t> bound) {
    const LatticeRep lattice = construction_a(named_code(id));
    const std::int64_t minimum = min_norm(lattice);
    const ShortVectorReport report = short_vectors(lattice, bound.value_or(minimum));
    py::dict counts;
    for (const auto& [norm, count] : report.counts_by_norm) counts[py::int_(norm)] = count;
    py::dict d;
    d["code"] = id;
    d["unimodular"] = is_unimodular(lattice);
    d["even"] = is_even(lattice);
    d["min_norm"] = minimum;
    d["norm_bound"] = report.norm_bound;
    d["counts_by_norm"] = counts;
    return d;
}

py::list theta(const std::string& id, std::int64_t n) {
    py::list out;
    if (id == "M") {
        const QSeries s = quaternary_theta(quaternary_gram(), n);
        for (std::int64_t i = 0; i <= n; ++i) out.append(to_py(s.coefficient(i)));
    } else {
        for (std::uint64_t c : theta_coeffs(construction_a(named_code(id)), n)) out.append(c);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact lattice, code and q-series routines behind the oddleech package";

    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<CertificateParseError>(m, "CertificateParseError", PyExc_ValueError);

    m.def("build_frame", [](std::int64_t k) { return render(certificate_to_json(build_frame(k))); }, py::arg("k"),
          "Certificate JSON for a frame of norm k (k >= 3).");
    m.def(
        "check_frame",
        [](const std::string& text) {
            const FrameChecks c = check_frame(certificate_from_text(text));
            return py::make_tuple(c.gram_ok, c.membership_ok);
        },
        py::arg("certificate"), "(gram_ok, membership_ok) for certificate JSON text.");
    m.def(
        "extract_code",
        [](const std::string& text) {
            const ZkCode c = extract_code(certificate_from_text(text));
            return py::make_tuple(c.modulus(), c.generator().to_int64_rows());
        },
        py::arg("certificate"));
    m.def("lattice_summary", &lattice_summary, py::arg("code"), py::arg("bound") = py::none());
    m.def("theta", &theta, py::arg("code"), py::arg("n"));
    m.def(
        "identity_check",
        [](std::int64_t bound) {
            const IdentityResult r = identity_check(bound);
            return py::make_tuple(r.holds, r.first_mismatch);
        },
        py::arg("bound") = kIdentityBound);
    m.def(
        "represent_quaternary",
        [](std::int64_t k) -> std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> {
            const auto r = represent_quaternary(k);
            if (!r) return std::nullopt;
            return std::make_tuple(r->a, r->b, r->c, r->d);
        },
        py::arg("k"));
    m.def(
        "four_squares",
        [](std::int64_t n) {
            const FourSquares s = four_squares(n);
            return std::make_tuple(s.w, s.x, s.y, s.z);
        },
        py::arg("n"));
    m.def("code_size", [](const std::string& id) { return to_py(code_size(named_code(id))); }, py::arg("code"));
    m.def("is_self_dual", [](const std::string& id) { return is_self_dual(named_code(id)); }, py::arg("code"));
    m.def("min_euclidean_weight", [](const std::string& id) { return min_euclidean_weight(named_code(id)); },
          py::arg("code"));
    m.def("sigma1", [](std::int64_t n) { return to_py(sigma1(n)); }, py::arg("n"));
}
