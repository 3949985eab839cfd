#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "formstab/io.hpp"
#include "formstab/stabilizer.hpp"
#include "formstab/verify.hpp"

namespace {

using namespace formstab;

// Exit codes: 0 success, 2 invalid form/file/arguments, 3 singular form,
// 4 certificate failure. Diagnostics go to stderr, data to stdout/--out.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitSingular = 3;
constexpr int kExitCertificate = 4;

struct FormOptions {
    std::string name;
    std::int64_t n = 0;
    std::int64_t p = -1;
    std::int64_t q = -1;
    std::string file;
};

void add_form_options(CLI::App* cmd, FormOptions& opts) {
    cmd->add_option("--form", opts.name,
                    "Named form: identity | symplectic | indefinite | minkowski");
    cmd->add_option("--n", opts.n, "Size parameter for identity (NxN) and symplectic (2Nx2N)");
    cmd->add_option("--p", opts.p, "Positive signature count for --form indefinite");
    cmd->add_option("--q", opts.q, "Negative signature count for --form indefinite");
    cmd->add_option("--file", opts.file, "Matrix file holding the form (.mtx/.csv/.json)");
}

BilinearForm resolve_form(const FormOptions& opts, const Tolerances& tols) {
    const bool named = !opts.name.empty();
    const bool from_file = !opts.file.empty();
    if (named == from_file) {
        throw InvalidArgumentError("give exactly one form source: --form NAME or --file PATH");
    }
    if (from_file) {
        return validate_form(read_matrix_file(opts.file), tols);
    }
    if (opts.name == "identity") {
        if (opts.n < 1) throw InvalidArgumentError("--form identity needs --n >= 1");
        return indefinite_form(opts.n, 0, tols);
    }
    if (opts.name == "symplectic") {
        if (opts.n < 1) throw InvalidArgumentError("--form symplectic needs --n >= 1");
        return symplectic_form(opts.n, tols);
    }
    if (opts.name == "indefinite") {
        if (opts.p < 0 || opts.q < 0) {
            throw InvalidArgumentError("--form indefinite needs --p and --q");
        }
        return indefinite_form(opts.p, opts.q, tols);
    }
    if (opts.name == "minkowski") {
        return indefinite_form(1, 3, tols);
    }
    throw InvalidArgumentError("unknown form name '" + opts.name + "'");
}

MatrixFormat parse_format(const std::string& name) {
    if (name == "mm") return MatrixFormat::matrix_market;
    if (name == "csv") return MatrixFormat::csv;
    if (name == "json") return MatrixFormat::json;
    throw InvalidArgumentError("unknown output format '" + name + "' (use mm | csv | json)");
}

std::string indexed_path(const std::string& prefix, std::size_t index,
                         const char* suffix) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "_%04zu", index);
    return prefix + buf + suffix;
}

struct GenConfig {
    FormOptions form;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string format_name = "mm";
    std::string out_prefix;
    bool verify = false;
};

int cmd_gen(const GenConfig& cfg, const Tolerances& tols) {
    if (cfg.count < 1) throw InvalidArgumentError("--count must be at least 1");
    const BilinearForm form = resolve_form(cfg.form, tols);
    const MatrixFormat format = parse_format(cfg.format_name);

    const RngStream master(cfg.seed);
    bool all_passed = true;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        RngStream stream = master.child(i);
        const StabilizerSample sample = generate(form, stream, tols);

        if (cfg.out_prefix.empty()) {
            write_matrix(std::cout, sample.A, format);
        } else {
            write_matrix_file(indexed_path(cfg.out_prefix, i, format_extension(format)),
                              sample.A, format);
        }
        if (cfg.verify) {
            const Certificate cert = certify(sample.A, form, std::nullopt, tols);
            all_passed = all_passed && cert.passed;
            const std::string json = certificate_to_json(cert);
            if (cfg.out_prefix.empty()) {
                std::cerr << json << "\n";
            } else {
                std::ofstream out(indexed_path(cfg.out_prefix, i, ".cert.json"));
                if (!out) throw IoError("cannot write certificate file");
                out << json << "\n";
            }
        }
    }
    std::cout.flush();
    return all_passed ? kExitOk : kExitCertificate;
}

struct VerifyConfig {
    FormOptions form;
    std::string matrix_file;
    double tol = 0.0;
    bool has_tol = false;
};

int cmd_verify(const VerifyConfig& cfg, const Tolerances& tols) {
    const BilinearForm form = resolve_form(cfg.form, tols);
    const RealMatrix a = read_matrix_file(cfg.matrix_file);
    const std::optional<double> tol =
        cfg.has_tol ? std::optional<double>(cfg.tol) : std::nullopt;
    const Certificate cert = certify(a, form, tol, tols);
    std::cout << certificate_to_json(cert) << "\n";
    return cert.passed ? kExitOk : kExitCertificate;
}

struct StatsConfig {
    FormOptions form;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string out_file;
};

int cmd_stats(const StatsConfig& cfg, const Tolerances& tols) {
    if (cfg.count < 1) throw InvalidArgumentError("--count must be at least 1");
    const BilinearForm form = resolve_form(cfg.form, tols);

    const RngStream master(cfg.seed);
    std::vector<RealMatrix> samples;
    samples.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        RngStream stream = master.child(i);
        samples.push_back(generate(form, stream, tols).A);
    }
    const std::string json = moment_stats_to_json(moment_stats(samples));
    if (cfg.out_file.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(cfg.out_file);
        if (!out) throw IoError("cannot write '" + cfg.out_file + "'");
        out << json << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random orthogonal matrices preserving a symmetric or "
                 "skew-symmetric bilinear form"};
    app.require_subcommand(1);

    GenConfig gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate samples");
    add_form_options(gen_cmd, gen.form);
    gen_cmd->add_option("--seed", gen.seed, "Master seed; sample i uses child stream i")
        ->required();
    gen_cmd->add_option("--count", gen.count, "Number of samples (default 1)");
    gen_cmd->add_option("--format", gen.format_name, "Output format: mm | csv | json");
    gen_cmd->add_option("--out", gen.out_prefix,
                        "Write PREFIX_NNNN.<ext> files instead of stdout");
    gen_cmd->add_flag("--verify", gen.verify,
                      "Attach a certificate per sample; exit 4 unless all pass");

    VerifyConfig ver;
    CLI::App* ver_cmd = app.add_subcommand("verify", "Check a matrix against a form");
    add_form_options(ver_cmd, ver.form);
    ver_cmd->add_option("--matrix", ver.matrix_file, "Matrix file to check")->required();
    auto* tol_opt = ver_cmd->add_option("--tol", ver.tol, "Residual tolerance override");

    StatsConfig stats;
    CLI::App* stats_cmd = app.add_subcommand("stats", "Entrywise moment summary of samples");
    add_form_options(stats_cmd, stats.form);
    stats_cmd->add_option("--seed", stats.seed, "Master seed")->required();
    stats_cmd->add_option("--count", stats.count, "Number of samples")->required();
    stats_cmd->add_option("--out", stats.out_file, "Write the JSON summary to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        const Tolerances tols = Tolerances::from_env();
        if (gen_cmd->parsed()) return cmd_gen(gen, tols);
        if (ver_cmd->parsed()) {
            ver.has_tol = tol_opt->count() > 0;
            return cmd_verify(ver, tols);
        }
        if (stats_cmd->parsed()) return cmd_stats(stats, tols);
        return kExitInvalid;
    } catch (const SingularInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
