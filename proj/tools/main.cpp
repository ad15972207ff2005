// sqos command line: run single simulations or parameter sweeps, verify
// asymptotic entropy laws, list scenarios. All state flows through flags and
// the config file; output is deterministic CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqos/sqos.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;
constexpr int exit_verify_fail = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sqos::ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sqos::RunConfig load_config(const std::string& path,
                            const std::vector<std::string>& overrides) {
    sqos::RunConfig cfg;
    if (!path.empty()) cfg = sqos::parse_config(read_file(path));
    for (const auto& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw sqos::ConfigError("--set", "expected key=value, got '" + ov + "'");
        sqos::apply_config_key(cfg, ov.substr(0, eq), ov.substr(eq + 1));
    }
    sqos::validate_config(cfg);
    return cfg;
}

void write_output(const std::string& path, const std::string& data, bool quiet) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sqos::ConfigError("out", "cannot write '" + path + "'");
    out << data;
    if (!quiet) std::cerr << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy and uncertainty of squeezed open quantum systems"};
    app.require_subcommand(1);

    std::string config_path, out_path, law;
    std::vector<std::string> overrides;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress progress messages");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "config file (key=value lines)");
        sub->add_option("--out", out_path, "output path ('-' = stdout)");
        sub->add_option("--set", overrides, "override config entries (key=value)")
            ->take_all();
    };

    auto* cmd_run = app.add_subcommand("run", "run one scenario over the output grid");
    add_common(cmd_run);
    auto* cmd_sweep = app.add_subcommand("sweep", "run a parameter sweep");
    add_common(cmd_sweep);
    auto* cmd_verify = app.add_subcommand("verify", "check an asymptotic law");
    add_common(cmd_verify);
    cmd_verify->add_option("--law", law,
                           "static-thermal | relaxation | pure-zero | inverted-high-t | "
                           "inverted-zero-t | desitter-high-t | desitter-finite-t | "
                           "fig2-minima")
        ->required();
    auto* cmd_list = app.add_subcommand("list-scenarios", "describe available scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (cmd_list->parsed()) {
            std::cout << "static    harmonic oscillator in an ohmic bath; parameters k, "
                         "gamma0 (< k), T, sigma|r0\n"
                      << "inverted  inverted oscillator, the simplest squeezed system; "
                         "parameters k, gamma0, T, sigma|r0\n"
                      << "desitter  massless minimally coupled field mode on a de Sitter "
                         "background; parameters k, c (< 1/2), H, T, z_i, z_stop\n";
            return exit_ok;
        }

        sqos::RunConfig cfg = load_config(config_path, overrides);
        if (!out_path.empty()) cfg.out = out_path;

        if (cmd_run->parsed()) {
            sqos::RunTable table = sqos::run_single(cfg);
            std::ostringstream os;
            sqos::write_csv(os, cfg, table);
            write_output(cfg.out, os.str(), quiet);
            return exit_ok;
        }
        if (cmd_sweep->parsed()) {
            std::ostringstream os;
            sqos::write_sweep_csv(os, cfg);
            write_output(cfg.out, os.str(), quiet);
            return exit_ok;
        }
        if (cmd_verify->parsed()) {
            sqos::VerifyReport rep = sqos::verify(cfg, law);
            std::ostringstream os;
            sqos::write_verify_report(os, rep);
            write_output(cfg.out, os.str(), quiet);
            return rep.pass() ? exit_ok : exit_verify_fail;
        }
    } catch (const sqos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_config;
}
