#include "oddleech/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "oddleech/codes.hpp"
#include "oddleech/construction_a.hpp"
#include "oddleech/errors.hpp"
#include "oddleech/frames.hpp"
#include "oddleech/lattice_analysis.hpp"
#include "oddleech/qseries.hpp"
#include "oddleech/serialize.hpp"

namespace oddleech::cli {

namespace {

struct Options {
    std::string format = "json";

    std::int64_t k = 0;
    std::string out_path;
    std::string certificate_path;

    std::string code;
    std::optional<std::int64_t> bound;

    std::int64_t identity_bound = kIdentityBound;
    std::optional<std::int64_t> inject_b_fault;

    std::int64_t theta_n = 0;
};

ZkCode named_code(const std::string& id) {
    if (id == "C4") return code_c4();
    if (id == "D4") return code_d4();
    if (id == "C11") return code_c11();
    throw std::invalid_argument("unknown code id " + id);
}

class Commands {
 public:
    Commands(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {
        out_ << std::boolalpha;
    }

    int frame_build() {
        if (opt_.k < 3) {
            err_ << "frame build: k must be at least 3 (the odd Leech lattice has minimum norm 3)\n";
            return kUsage;
        }
        const FrameCertificate f = build_frame(opt_.k);
        const FrameChecks checks = check_frame(f);
        const std::string text = render(certificate_to_json(f));
        if (!opt_.out_path.empty()) {
            std::ofstream file(opt_.out_path, std::ios::binary);
            if (!file) {
                err_ << "frame build: cannot open " << opt_.out_path << " for writing\n";
                return kUsage;
            }
            file << text;
        }
        if (text_mode()) {
            out_ << "k=" << f.k << " ambient=" << ambient_name(f.ambient) << " gram_ok=" << checks.gram_ok
                 << " membership_ok=" << checks.membership_ok << '\n';
            for (const auto& step : f.provenance) {
                out_ << "  " << step.operation;
                for (const auto& [key, value] : step.params) out_ << ' ' << key << '=' << value;
                out_ << '\n';
            }
        } else if (opt_.out_path.empty()) {
            out_ << text;
        }
        return checks.ok() ? kSuccess : kFailure;
    }

    int frame_verify() {
        std::ifstream file(opt_.certificate_path, std::ios::binary);
        if (!file) {
            emit_error("cannot read " + opt_.certificate_path);
            return kUsage;
        }
        std::stringstream buffer;
        buffer << file.rdbuf();
        FrameCertificate f;
        try {
            f = certificate_from_text(buffer.str());
        } catch (const CertificateParseError& e) {
            emit_error(e.what());
            return kUsage;
        }
        const FrameChecks checks = check_frame(f);
        if (text_mode()) {
            out_ << (checks.ok() ? "valid" : "INVALID") << " k=" << f.k << " gram_ok=" << checks.gram_ok
                 << " membership_ok=" << checks.membership_ok << '\n';
        } else {
            out_ << render(Json{{"k", f.k},
                                {"ambient", std::string(ambient_name(f.ambient))},
                                {"gram_ok", checks.gram_ok},
                                {"membership_ok", checks.membership_ok},
                                {"valid", checks.ok()}});
        }
        return checks.ok() ? kSuccess : kFailure;
    }

    int lattice_analyze() {
        const ZkCode code = named_code(opt_.code);
        const LatticeRep lattice = construction_a(code);
        const bool unimodular = is_unimodular(lattice);
        const bool even = is_even(lattice);
        const std::int64_t minimum = min_norm(lattice);
        const std::int64_t bound = opt_.bound.value_or(minimum);
        const ShortVectorReport report = short_vectors(lattice, bound, false);
        if (text_mode()) {
            out_ << "code=" << opt_.code << " unimodular=" << unimodular << " even=" << even << " minNorm=" << minimum
                 << '\n';
            for (const auto& [norm, count] : report.counts_by_norm) out_ << "  norm " << norm << ": " << count << '\n';
        } else {
            Json counts = Json::object();
            for (const auto& [norm, count] : report.counts_by_norm) counts[std::to_string(norm)] = count;
            out_ << render(Json{{"code", opt_.code},
                                {"unimodular", unimodular},
                                {"even", even},
                                {"minNorm", minimum},
                                {"normBound", bound},
                                {"countsByNorm", counts}});
        }
        return kSuccess;
    }

    int qseries_identity() {
        const std::int64_t n = opt_.identity_bound;
        if (n < 1) {
            err_ << "qseries identity: bound must be positive\n";
            return kUsage;
        }
        QSeries b = b_series(n);
        if (opt_.inject_b_fault) {
            const std::int64_t at = *opt_.inject_b_fault;
            if (at < 1 || at > n) {
                err_ << "qseries identity: fault index out of range\n";
                return kUsage;
            }
            b.set_coefficient(at, b.coefficient(at) + 1);
        }
        const IdentityResult r = identity_check(quaternary_theta(quaternary_gram(), n), b, n);
        if (text_mode()) {
            out_ << (r.holds ? "holds" : "mismatch") << " bound=" << n;
            if (r.first_mismatch) out_ << " first_mismatch=" << *r.first_mismatch;
            out_ << '\n';
        } else {
            out_ << render(Json{{"bound", n},
                                {"holds", r.holds},
                                {"firstMismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}});
        }
        return r.holds ? kSuccess : kFailure;
    }

    int represent() {
        if (opt_.k < 1) {
            err_ << "represent: k must be positive\n";
            return kUsage;
        }
        const auto rep = represent_quaternary(opt_.k);
        if (text_mode()) {
            if (rep) {
                out_ << '(' << rep->a << ',' << rep->b << ',' << rep->c << ',' << rep->d << ")\n";
            } else {
                out_ << "none\n";
            }
        } else {
            Json r = rep ? Json{{"a", rep->a}, {"b", rep->b}, {"c", rep->c}, {"d", rep->d}} : Json(nullptr);
            out_ << render(Json{{"k", opt_.k}, {"representation", r}});
        }
        return kSuccess;
    }

    int theta() {
        if (opt_.theta_n < 0) {
            err_ << "theta: n must be non-negative\n";
            return kUsage;
        }
        Json coeffs = Json::array();
        if (opt_.code == "M") {
            const QSeries s = quaternary_theta(quaternary_gram(), opt_.theta_n);
            for (std::int64_t i = 0; i <= opt_.theta_n; ++i) coeffs.push_back(integer_to_json(s.coefficient(i)));
        } else {
            for (std::uint64_t c : theta_coeffs(construction_a(named_code(opt_.code)), opt_.theta_n)) coeffs.push_back(c);
        }
        if (text_mode()) {
            for (std::size_t i = 0; i < coeffs.size(); ++i) out_ << (i ? " " : "") << coeffs[i].dump();
            out_ << '\n';
        } else {
            out_ << render(Json{{"code", opt_.code}, {"n", opt_.theta_n}, {"coefficients", coeffs}});
        }
        return kSuccess;
    }

 private:
    bool text_mode() const { return opt_.format == "text"; }

    void emit_error(const std::string& message) {
        if (text_mode()) {
            err_ << message << '\n';
        } else {
            out_ << render(Json{{"error", message}, {"valid", false}});
        }
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Frame certificates, Construction A lattices and q-series checks for O24", "oddleech"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* frame = app.add_subcommand("frame", "Build or verify frame certificates");
    frame->require_subcommand(1);
    auto* build = frame->add_subcommand("build", "Build a certified frame of norm K");
    build->add_option("--k", opt.k, "Frame norm")->required();
    build->add_option("--out", opt.out_path, "Write the certificate to this file");
    auto* verify = frame->add_subcommand("verify", "Re-check a certificate file");
    verify->add_option("file", opt.certificate_path, "Certificate JSON")->required();

    auto* lattice = app.add_subcommand("lattice", "Lattice checks");
    lattice->require_subcommand(1);
    auto* analyze = lattice->add_subcommand("analyze", "Unimodularity, parity, minimum and short vector counts");
    analyze->add_option("--code", opt.code, "Code id")->required()->check(CLI::IsMember({"C4", "D4", "C11"}));
    analyze->add_option("--bound", opt.bound, "Count vectors up to this norm (default: the minimum)");

    auto* qseries = app.add_subcommand("qseries", "q-series checks");
    qseries->require_subcommand(1);
    auto* identity = qseries->add_subcommand("identity", "Theta/eta identity check");
    identity->add_option("--bound", opt.identity_bound, "Largest exponent checked")->capture_default_str();
    identity->add_option("--inject-b-fault", opt.inject_b_fault, "Add 1 to b(N) before checking (test hook)")
        ->group("");

    auto* rep = app.add_subcommand("represent", "Quaternary representation of 4K");
    rep->add_option("--k", opt.k, "Target")->required();

    auto* theta = app.add_subcommand("theta", "Theta series coefficients");
    theta->add_option("--code", opt.code, "C4, D4, C11 or M (the quaternary form)")
        ->required()
        ->check(CLI::IsMember({"C4", "D4", "C11", "M"}));
    theta->add_option("--n", opt.theta_n, "Largest exponent")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kSuccess;
        }
        err << e.what() << '\n' << app.help();
        return kUsage;
    }

    Commands commands(opt, out, err);
    try {
        if (*build) return commands.frame_build();
        if (*verify) return commands.frame_verify();
        if (*analyze) return commands.lattice_analyze();
        if (*identity) return commands.qseries_identity();
        if (*rep) return commands.represent();
        if (*theta) return commands.theta();
    } catch (const GuardExceeded& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace oddleech::cli
