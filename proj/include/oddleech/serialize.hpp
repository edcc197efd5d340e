#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "oddleech/codes.hpp"
#include "oddleech/construction_a.hpp"
#include "oddleech/frames.hpp"
#include "oddleech/int_matrix.hpp"
#include "oddleech/lattice_analysis.hpp"

namespace oddleech {

using Json = nlohmann::json;

inline constexpr int kCertificateVersion = 1;

/// Malformed or schema-violating certificate text.
class CertificateParseError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// JSON number when |v| <= 2^53 - 1, decimal string otherwise.
Json integer_to_json(const Integer& v);
/// Accepts integral numbers and decimal strings.
Integer integer_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
Json vectors_to_json(const std::vector<IntVector>& rows);

Json code_to_json(const ZkCode& code);
Json lattice_to_json(const LatticeRep& lattice);
Json report_to_json(const ShortVectorReport& report);

Json certificate_to_json(const FrameCertificate& frame);
FrameCertificate certificate_from_json(const Json& j);
FrameCertificate certificate_from_text(const std::string& text);

/// Deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string render(const Json& j);

}  // namespace oddleech
