#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "oddleech/cli.hpp"
#include "oddleech/frames.hpp"
#include "oddleech/serialize.hpp"

using namespace oddleech;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const char* dir = std::getenv("ODDLEECH_TMP");
    std::filesystem::path base = dir ? dir : std::filesystem::temp_directory_path();
    return base / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("integers above 2^53 - 1 become decimal strings") {
    const Integer limit = (Integer(1) << 53) - 1;
    CHECK(integer_to_json(limit).is_number_integer());
    CHECK(integer_to_json(-limit).is_number_integer());
    CHECK(integer_to_json(limit + 1) == Json("9007199254740992"));
    CHECK(integer_to_json(-(limit + 1)) == Json("-9007199254740992"));
    const Integer big("123456789012345678901234567890");
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(-17)) == -17);
    CHECK_THROWS_AS(integer_from_json(Json("12x")), CertificateParseError);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), CertificateParseError);
}

TEST_CASE("code and lattice JSON") {
    const Json c = code_to_json(code_d4());
    CHECK(c.at("modulus") == 4);
    CHECK(c.at("length") == 24);
    CHECK(c.at("generator").size() == 12);
    CHECK(c.at("generator")[0][13] == 1);
    const Json l = lattice_to_json(ambient_lattice(Ambient::C11));
    CHECK(l.at("scale") == 11);
    CHECK(l.at("basis").size() == 24);
    CHECK(l.at("gram").size() == 24);
}

TEST_CASE("certificate JSON round trip") {
    for (std::int64_t k : {3, 11, 22, 97}) {
        const FrameCertificate f = build_frame(k);
        const Json j = certificate_to_json(f);
        CHECK(j.at("version") == 1);
        CHECK(j.at("k") == k);
        CHECK(j.at("ambient").at("scale") == ambient_scale(f.ambient));
        CHECK(j.at("ambient").at("modulus") == ambient_scale(f.ambient));
        CHECK(j.at("checks").at("gram_ok") == true);
        CHECK(j.at("checks").at("membership_ok") == true);
        const FrameCertificate back = certificate_from_text(render(j));
        CHECK(back.k == f.k);
        CHECK(back.ambient == f.ambient);
        CHECK(back.vectors == f.vectors);
        CHECK(back.provenance == f.provenance);
        CHECK(render(certificate_to_json(back)) == render(j));
    }
}

TEST_CASE("large certificate entries survive serialization") {
    FrameCertificate f = build_frame(3);
    f.vectors[0][0] = Integer("900719925474099300000");
    const FrameCertificate back = certificate_from_text(render(certificate_to_json(f)));
    CHECK(back.vectors[0][0] == f.vectors[0][0]);
    CHECK_FALSE(verify_frame(back));
}

TEST_CASE("certificate rendering is deterministic with sorted keys") {
    const std::string a = render(certificate_to_json(build_frame(10)));
    const std::string b = render(certificate_to_json(build_frame(10)));
    CHECK(a == b);
    CHECK(a.find("\"ambient\"") < a.find("\"checks\""));
    CHECK(a.find("\"checks\"") < a.find("\"k\""));
    CHECK(a.find("\"provenance\"") < a.find("\"vectors\""));
    CHECK(a.find("\"vectors\"") < a.find("\"version\""));
}

TEST_CASE("malformed certificates") {
    CHECK_THROWS_AS(certificate_from_text("{not json"), CertificateParseError);
    CHECK_THROWS_AS(certificate_from_text("[]"), CertificateParseError);
    Json j = certificate_to_json(build_frame(3));
    Json missing = j;
    missing.erase("vectors");
    CHECK_THROWS_AS(certificate_from_json(missing), CertificateParseError);
    Json version = j;
    version["version"] = 2;
    CHECK_THROWS_AS(certificate_from_json(version), CertificateParseError);
    Json ambient = j;
    ambient["ambient"]["code"] = "E8";
    CHECK_THROWS_AS(certificate_from_json(ambient), CertificateParseError);
    Json scale = j;
    scale["ambient"]["scale"] = 11;
    CHECK_THROWS_AS(certificate_from_json(scale), CertificateParseError);
}

TEST_CASE("cli: frame build") {
    const Run ok = run({"frame", "build", "--k", "3"});
    CHECK(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j.at("k") == 3);
    CHECK(verify_frame(certificate_from_json(j)));

    CHECK(run({"frame", "build", "--k", "2"}).code == 2);

    const Run r121 = run({"frame", "build", "--k", "121"});
    CHECK(r121.code == 0);
    const Json p = Json::parse(r121.out).at("provenance");
    CHECK(p[0].at("operation") == "standard_frame_11");
    CHECK(p[1].at("m") == 11);
}

TEST_CASE("cli: frame verify") {
    const auto good = scratch("cert_ok.json");
    CHECK(run({"frame", "build", "--k", "7", "--out", good.string()}).code == 0);
    const Run ok = run({"frame", "verify", good.string()});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("valid") == true);

    Json tampered = Json::parse(read_file(good));
    tampered["vectors"][0][0] = tampered["vectors"][0][0].get<std::int64_t>() + 1;
    const auto bad = scratch("cert_bad.json");
    write_file(bad, tampered.dump());
    const Run fail = run({"frame", "verify", bad.string()});
    CHECK(fail.code == 1);
    CHECK(Json::parse(fail.out).at("gram_ok") == false);

    const auto garbage = scratch("cert_garbage.json");
    write_file(garbage, "{\"version\": 1, \"k\": ");
    CHECK(run({"frame", "verify", garbage.string()}).code == 2);
    CHECK(run({"frame", "verify", scratch("does_not_exist.json").string()}).code == 2);
}

TEST_CASE("cli: build, write and verify round trip for k in 3..50") {
    for (int k = 3; k <= 50; ++k) {
        const auto path = scratch("roundtrip_" + std::to_string(k) + ".json");
        REQUIRE(run({"frame", "build", "--k", std::to_string(k), "--out", path.string()}).code == 0);
        CHECK(run({"frame", "verify", path.string()}).code == 0);
        const std::string first = read_file(path);
        REQUIRE(run({"frame", "build", "--k", std::to_string(k), "--out", path.string()}).code == 0);
        CHECK(read_file(path) == first);
    }
}

TEST_CASE("cli: lattice analyze") {
    const Run d4 = run({"lattice", "analyze", "--code", "D4"});
    CHECK(d4.code == 0);
    const Json jd = Json::parse(d4.out);
    CHECK(jd.at("unimodular") == true);
    CHECK(jd.at("even") == false);
    CHECK(jd.at("minNorm") == 3);
    CHECK(jd.at("countsByNorm").at("3") == 4096);

    const Json jc = Json::parse(run({"lattice", "analyze", "--code", "C4"}).out);
    CHECK(jc.at("unimodular") == true);
    CHECK(jc.at("even") == true);
    CHECK(jc.at("minNorm") == 4);

    const Json j11 = Json::parse(run({"lattice", "analyze", "--code", "C11", "--bound", "3"}).out);
    CHECK(j11.at("unimodular") == true);
    CHECK(j11.at("minNorm") == 3);

    CHECK(run({"lattice", "analyze", "--code", "E8"}).code == 2);
    CHECK(run({"lattice", "analyze", "--code", "D4", "--bound", "9"}).code == 2);
}

TEST_CASE("cli: qseries identity") {
    const Run ok = run({"qseries", "identity", "--bound", "13"});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("holds") == true);
    CHECK(Json::parse(ok.out).at("firstMismatch").is_null());

    const Run fault = run({"qseries", "identity", "--bound", "13", "--inject-b-fault", "5"});
    CHECK(fault.code == 1);
    CHECK(Json::parse(fault.out).at("firstMismatch") == 5);

    const Run text = run({"--format", "text", "qseries", "identity", "--bound", "20"});
    CHECK(text.code == 0);
    CHECK(text.out == "holds bound=20\n");
}

TEST_CASE("cli: represent") {
    const Json r3 = Json::parse(run({"represent", "--k", "3"}).out).at("representation");
    CHECK(r3 == Json{{"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}});
    const Run r11 = run({"represent", "--k", "11"});
    CHECK(r11.code == 0);
    CHECK(Json::parse(r11.out).at("representation").is_null());
    CHECK(run({"--format", "text", "represent", "--k", "4"}).out == "(4,0,0,0)\n");
    CHECK(run({"--format", "text", "represent", "--k", "11"}).out == "none\n");
    CHECK(run({"represent", "--k", "0"}).code == 2);
}

TEST_CASE("cli: theta") {
    const Json m = Json::parse(run({"theta", "--code", "M", "--n", "13"}).out);
    CHECK(m.at("coefficients") == Json::parse("[1,0,0,4,4,4,4,8,12,12,4,0,16,8]"));
    const Json d = Json::parse(run({"theta", "--code", "D4", "--n", "3"}).out);
    CHECK(d.at("coefficients") == Json::parse("[1,0,0,4096]"));
    CHECK(run({"theta", "--code", "D4", "--n", "17"}).code == 2);
}

TEST_CASE("cli: usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frame"}).code == 2);
    CHECK(run({"frame", "build", "--k", "3", "--bogus"}).code == 2);
    CHECK(run({"represent"}).code == 2);
    CHECK(run({"--format", "xml", "represent", "--k", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
