#include "oddleech/serialize.hpp"

#include <cstdint>

namespace oddleech {

namespace {

const Integer& max_safe_integer() {
    static const Integer v = (Integer(1) << 53) - 1;
    return v;
}

std::int64_t small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw CertificateParseError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Json integer_to_json(const Integer& v) {
    if (abs(v) <= max_safe_integer()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
    if (j.is_string()) {
        Integer v;
        const std::string s = j.get<std::string>();
        if (s.empty() || v.set_str(s, 10) != 0) throw CertificateParseError("invalid decimal integer: " + s);
        return v;
    }
    throw CertificateParseError("expected an integer or a decimal string");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : m.row(i)) row.push_back(integer_to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vectors_to_json(const std::vector<IntVector>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(integer_to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

Json code_to_json(const ZkCode& code) {
    return Json{{"modulus", code.modulus()}, {"length", code.length()}, {"generator", matrix_to_json(code.generator())}};
}

Json lattice_to_json(const LatticeRep& lattice) {
    return Json{{"scale", lattice.scale}, {"basis", matrix_to_json(lattice.basis)}, {"gram", matrix_to_json(lattice.gram_scaled)}};
}

Json report_to_json(const ShortVectorReport& report) {
    Json counts = Json::object();
    for (const auto& [norm, count] : report.counts_by_norm) counts[std::to_string(norm)] = count;
    Json out{{"normBound", report.norm_bound}, {"countsByNorm", counts}};
    if (!report.witnesses.empty()) out["witnesses"] = vectors_to_json(report.witnesses);
    return out;
}

Json certificate_to_json(const FrameCertificate& frame) {
    const FrameChecks checks = check_frame(frame);
    Json provenance = Json::array();
    for (const auto& step : frame.provenance) {
        Json s{{"operation", step.operation}};
        for (const auto& [key, value] : step.params) s[key] = value;
        provenance.push_back(std::move(s));
    }
    const std::int64_t scale = ambient_scale(frame.ambient);
    return Json{
        {"version", kCertificateVersion},
        {"k", frame.k},
        {"ambient", {{"code", std::string(ambient_name(frame.ambient))}, {"modulus", scale}, {"scale", scale}}},
        {"vectors", vectors_to_json(frame.vectors)},
        {"provenance", provenance},
        {"checks", {{"gram_ok", checks.gram_ok}, {"membership_ok", checks.membership_ok}}},
    };
}

FrameCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw CertificateParseError("certificate must be a JSON object");
    for (const char* key : {"version", "k", "ambient", "vectors"}) {
        if (!j.contains(key)) throw CertificateParseError(std::string("certificate is missing \"") + key + "\"");
    }
    if (small_int(j.at("version"), "version") != kCertificateVersion) {
        throw CertificateParseError("unsupported certificate version");
    }
    FrameCertificate f;
    f.k = small_int(j.at("k"), "k");
    const Json& amb = j.at("ambient");
    if (!amb.is_object() || !amb.contains("code") || !amb.at("code").is_string()) {
        throw CertificateParseError("ambient.code must be a string");
    }
    const auto ambient = parse_ambient(amb.at("code").get<std::string>());
    if (!ambient) throw CertificateParseError("unknown ambient code " + amb.at("code").dump());
    f.ambient = *ambient;
    for (const char* key : {"modulus", "scale"}) {
        if (amb.contains(key) && small_int(amb.at(key), key) != ambient_scale(f.ambient)) {
            throw CertificateParseError(std::string("ambient.") + key + " does not match the ambient code");
        }
    }
    const Json& vectors = j.at("vectors");
    if (!vectors.is_array()) throw CertificateParseError("vectors must be an array");
    for (const auto& row : vectors) {
        if (!row.is_array()) throw CertificateParseError("each vector must be an array");
        IntVector v;
        v.reserve(row.size());
        for (const auto& x : row) v.push_back(integer_from_json(x));
        f.vectors.push_back(std::move(v));
    }
    if (j.contains("provenance")) {
        const Json& prov = j.at("provenance");
        if (!prov.is_array()) throw CertificateParseError("provenance must be an array");
        for (const auto& s : prov) {
            if (!s.is_object() || !s.contains("operation") || !s.at("operation").is_string()) {
                throw CertificateParseError("provenance entries need an \"operation\" string");
            }
            ProvenanceStep step{s.at("operation").get<std::string>(), {}};
            for (const auto& [key, value] : s.items()) {
                if (key != "operation") step.params[key] = small_int(value, "provenance parameter");
            }
            f.provenance.push_back(std::move(step));
        }
    }
    return f;
}

FrameCertificate certificate_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw CertificateParseError(std::string("malformed JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace oddleech
