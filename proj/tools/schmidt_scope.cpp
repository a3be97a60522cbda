// schmidt-scope: certify Schmidt-number lower bounds from GSIC statistics.
//
// Exit codes: 0 success, 1 a well-formed validation failure, 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "schmidt/criteria.hpp"
#include "schmidt/io.hpp"
#include "schmidt/scan.hpp"

namespace {

using namespace schmidt;

constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SCHMIDT_SCOPE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric SCHMIDT_SCOPE_SEED='" << env << "'\n";
        }
    }
    return 0;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

Povm povm_for(std::size_t d, bool sic, double t, const std::string& fiducial_path) {
    if (sic || !fiducial_path.empty()) {
        const auto fid = fiducial_path.empty() ? builtin_sic_fiducial(d) : fiducial_from_json(read_json_file(fiducial_path));
        return sic_weyl_heisenberg(d, fid);
    }
    return gsic_from_basis(gell_mann_basis(d), t);
}

struct ScanOptions {
    std::string family = "bound-entangled";
    std::string criterion = "gsic";
    std::size_t d = 3;
    double q = 1.0;
    double t = 0.01;
    int r = 1;
    std::optional<double> min, max;
    std::size_t steps = 101;
    std::string fiducial;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool rotate = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

int run_scan_command(const ScanOptions& o) {
    ScanConfig cfg;
    try {
        cfg = ScanConfig::defaults_for(state_family_from_string(o.family));
        cfg.criterion = scan_criterion_from_string(o.criterion);
        cfg.d = o.d;
        cfg.q = o.q;
        cfg.t = o.t;
        cfg.r = o.r;
        if (o.min) cfg.min = *o.min;
        if (o.max) cfg.max = *o.max;
        cfg.steps = o.steps;
        cfg.seed = o.seed.value_or(default_seed());
        cfg.rotate = o.rotate;
        cfg.threads = o.threads;
        if (!o.fiducial.empty()) cfg.fiducial = fiducial_from_json(read_json_file(o.fiducial));
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return kExitMalformed;
    }
    const std::string csv = scan_csv(run_scan(cfg));
    try {
        emit(o.out, csv);
    } catch (const std::exception& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return kExitMalformed;
    }
    return 0;
}

struct CertifyOptions {
    std::string input;
    double t = 0.01;
    bool sic = false;
    std::string fiducial;
    std::string out;
    bool json_only = false;
};

int run_certify_command(const CertifyOptions& o) {
    std::optional<BipartiteDensityMatrix> rho;
    std::optional<Povm> pa, pb;
    try {
        rho = state_from_json(read_json_file(o.input));
        pa = povm_for(rho->d1(), o.sic, o.t, o.fiducial);
        pb = conjugate_povm(rho->d2() == rho->d1() ? *pa : povm_for(rho->d2(), o.sic, o.t, o.fiducial));
    } catch (const std::exception& e) {
        std::cerr << "certify: " << e.what() << "\n";
        return kExitMalformed;
    }
    const SchmidtCertificate cert = certify_schmidt_number(*rho, *pa, *pb);
    const std::string cert_json = certificate_to_json(cert).dump(2) + "\n";
    if (o.json_only) {
        std::cout << cert_json;
    } else {
        std::ostringstream os;
        os << "state: " << cert.d1 << "x" << cert.d2 << " (" << o.input << ")\n";
        os << "a: " << format_double(cert.a1) << ", " << format_double(cert.a2) << "\n";
        os << "trace norm: " << format_double(cert.trace_norm) << "\n";
        for (const auto& [r, b] : cert.bounds)
            os << "bound r=" << r << ": " << format_double(b) << (cert.trace_norm > b ? "  exceeded" : "") << "\n";
        os << "Schmidt number >= " << cert.sn_lower_bound << "\n";
        std::cout << os.str();
    }
    if (!o.out.empty()) {
        try {
            write_text_file(o.out, cert_json);
        } catch (const std::exception& e) {
            std::cerr << "certify: " << e.what() << "\n";
            return kExitMalformed;
        }
    }
    return 0;
}

struct PovmOptions {
    std::size_t d = 3;
    double t = 0.01;
    bool sic = false;
    std::string fiducial;
    std::string input;
    std::string out;
};

int run_povm_gen(const PovmOptions& o) {
    Povm povm;
    try {
        povm = povm_for(o.d, o.sic, o.t, o.fiducial);
    } catch (const std::exception& e) {
        std::cerr << "povm gen: " << e.what() << "\n";
        return kExitFailure;
    }
    try {
        emit(o.out, povm_to_json(povm).dump(1) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "povm gen: " << e.what() << "\n";
        return kExitMalformed;
    }
    return 0;
}

int run_povm_validate(const PovmOptions& o) {
    Povm povm;
    try {
        const json j = read_json_file(o.input);
        povm.dim = j.at("dim").get<std::size_t>();
        povm.a = j.at("a").get<double>();
        if (j.contains("t") && !j["t"].is_null()) povm.t = j["t"].get<double>();
        if (j.contains("kind")) povm.kind = povm_kind_from_string(j["kind"].get<std::string>());
        for (const auto& e : j.at("elements")) povm.elements.push_back(matrix_from_json(e));
    } catch (const std::exception& e) {
        std::cerr << "povm validate: " << e.what() << "\n";
        return kExitMalformed;
    }
    const auto rep = validate_gsic(povm);
    std::cout << "POVM d=" << povm.dim << " kind=" << to_string(povm.kind) << " a=" << format_double(povm.a) << "\n"
              << rep.summary() << (rep.all_passed() ? "valid GSIC\n" : "INVALID: " + rep.failures() + "\n");
    return rep.all_passed() ? 0 : kExitFailure;
}

int run_povm_range(const PovmOptions& o) {
    try {
        const auto range = t_range(gell_mann_basis(o.d));
        std::cout << "t_min " << format_double(range.t_min) << "\n"
                  << "t_max " << format_double(range.t_max) << "\n"
                  << "a(t_min) " << format_double(a_from_t(o.d, range.t_min)) << "\n"
                  << "a(t_max) " << format_double(a_from_t(o.d, range.t_max)) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "povm range: " << e.what() << "\n";
        return kExitMalformed;
    }
    return 0;
}

struct StateOptions {
    std::string family = "isotropic";
    std::size_t d = 3;
    double param = 0.0;
    double q = 1.0;
    std::vector<double> schmidt;
    std::string out;
};

int run_state_command(const StateOptions& o) {
    try {
        std::optional<BipartiteDensityMatrix> rho;
        if (o.family == "pure") {
            if (o.schmidt.empty()) throw std::invalid_argument("--schmidt coefficients are required for pure states");
            rho = pure_from_schmidt(SchmidtVector(o.schmidt), o.d, o.d);
        } else if (o.family == "maximally-mixed") {
            rho = isotropic(o.d, 0.0);
        } else {
            ScanConfig cfg;
            cfg.family = state_family_from_string(o.family);
            cfg.d = o.d;
            cfg.q = o.q;
            rho = scan_state(cfg, o.param);
        }
        emit(o.out, state_to_json(*rho).dump(1) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "state: " << e.what() << "\n";
        return kExitMalformed;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certify Schmidt-number lower bounds with GSIC measurements"};
    app.require_subcommand(1);
    int status = 0;

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "Sweep a state family and emit the criterion value as CSV");
    scan_cmd->add_option("--family", scan.family, "bound-entangled | isotropic | werner")->capture_default_str();
    scan_cmd->add_option("--criterion", scan.criterion, "gsic | sic | ccnr")->capture_default_str();
    scan_cmd->add_option("--d", scan.d, "Local dimension (isotropic, werner)")->capture_default_str();
    scan_cmd->add_option("--q", scan.q, "White-noise weight for the bound entangled family")->capture_default_str();
    scan_cmd->add_option("--t", scan.t, "GSIC construction parameter")->capture_default_str();
    scan_cmd->add_option("--r", scan.r, "Report ||P||_tr - bound(r)")->capture_default_str();
    scan_cmd->add_option("--min", scan.min, "Grid start (family default when omitted)");
    scan_cmd->add_option("--max", scan.max, "Grid end (family default when omitted)");
    scan_cmd->add_option("--steps", scan.steps, "Grid points, endpoints included")->capture_default_str();
    scan_cmd->add_option("--fiducial", scan.fiducial, "SIC fiducial JSON (required for sic with d > 3)");
    scan_cmd->add_option("--seed", scan.seed, "Seed for --rotate (default $SCHMIDT_SCOPE_SEED or 0)");
    scan_cmd->add_flag("--rotate", scan.rotate, "Mix the generators by a seeded random orthogonal matrix");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads");
    scan_cmd->add_option("--out", scan.out, "Output CSV path (stdout when omitted)");
    scan_cmd->callback([&] { status = run_scan_command(scan); });

    CertifyOptions cert;
    auto* cert_cmd = app.add_subcommand("certify", "Certify a Schmidt-number lower bound for a density matrix");
    cert_cmd->add_option("--in", cert.input, "Density-matrix JSON")->required();
    cert_cmd->add_option("--t", cert.t, "GSIC construction parameter")->capture_default_str();
    cert_cmd->add_flag("--sic", cert.sic, "Use the built-in SIC instead of a GSIC");
    cert_cmd->add_option("--fiducial", cert.fiducial, "SIC fiducial JSON (implies --sic)");
    cert_cmd->add_option("--out", cert.out, "Also write the certificate JSON here");
    cert_cmd->add_flag("--json", cert.json_only, "Print the certificate JSON instead of the summary");
    cert_cmd->callback([&] { status = run_certify_command(cert); });

    PovmOptions povm;
    auto* povm_cmd = app.add_subcommand("povm", "Generate, validate or inspect POVMs");
    povm_cmd->require_subcommand(1);
    auto* gen = povm_cmd->add_subcommand("gen", "Write a GSIC (or SIC) POVM as JSON");
    gen->add_option("--d", povm.d, "Dimension")->capture_default_str();
    gen->add_option("--t", povm.t, "GSIC construction parameter")->capture_default_str();
    gen->add_flag("--sic", povm.sic, "Weyl-Heisenberg SIC from the built-in fiducial");
    gen->add_option("--fiducial", povm.fiducial, "SIC fiducial JSON (implies --sic)");
    gen->add_option("--out", povm.out, "Output path (stdout when omitted)");
    gen->callback([&] { status = run_povm_gen(povm); });
    auto* val = povm_cmd->add_subcommand("validate", "Check the GSIC conditions of a POVM JSON file");
    val->add_option("--in", povm.input, "POVM JSON")->required();
    val->callback([&] { status = run_povm_validate(povm); });
    auto* range = povm_cmd->add_subcommand("range", "Print the admissible t interval for the Gell-Mann basis");
    range->add_option("--d", povm.d, "Dimension")->capture_default_str();
    range->callback([&] { status = run_povm_range(povm); });

    StateOptions state;
    auto* state_cmd = app.add_subcommand("state", "Write a benchmark density matrix as JSON");
    state_cmd->add_option("--family", state.family,
                          "bound-entangled | isotropic | werner | pure | maximally-mixed")
        ->capture_default_str();
    state_cmd->add_option("--d", state.d, "Local dimension")->capture_default_str();
    state_cmd->add_option("--param", state.param, "x, v or f")->capture_default_str();
    state_cmd->add_option("--q", state.q, "White-noise weight (bound-entangled)")->capture_default_str();
    state_cmd->add_option("--schmidt", state.schmidt, "Schmidt coefficients (pure)");
    state_cmd->add_option("--out", state.out, "Output path (stdout when omitted)");
    state_cmd->callback([&] { status = run_state_command(state); });

    std::vector<std::size_t> table_dims{2, 3, 4, 5};
    int mub_m = 2;
    std::optional<int> eam_n;
    std::string table_out;
    auto* table_cmd = app.add_subcommand("table", "Critical isotropic visibilities of each criterion as CSV");
    table_cmd->add_option("--d", table_dims, "Dimensions, comma separated")->delimiter(',')->capture_default_str();
    table_cmd->add_option("--m", mub_m, "Number of MUBs")->capture_default_str();
    table_cmd->add_option("--n", eam_n, "EAM count n (default d+1)");
    table_cmd->add_option("--out", table_out, "Output path (stdout when omitted)");
    table_cmd->callback([&] {
        try {
            emit(table_out, comparison_table_csv(table_dims, mub_m, eam_n));
        } catch (const std::exception& e) {
            std::cerr << "table: " << e.what() << "\n";
            status = kExitMalformed;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return status;
}
