#include "torusdisc/commands.hpp"
#include "torusdisc/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw torusdisc::config_error("cannot open config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int deliver(const torusdisc::CommandResult& res, const std::string& out_path) {
    if (!res.diagnostics.empty()) std::cerr << res.diagnostics;
    if (res.exit_code == torusdisc::kExitOk ||
        res.exit_code == torusdisc::kExitVerificationFailure) {
        if (out_path.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return torusdisc::kExitConfigError;
            }
            out << res.output;
        }
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    using namespace torusdisc;
    CLI::App app{"exact discriminants, heights and unit-group indices of "
                 "tori embedded in GL(n, Q)"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json";
    RunOptions opts;
    unsigned classify_n = 3;

    app.add_option("--out", out_path, "write the report to a file");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", opts.seed, "PRNG seed for randomized families");
    app.add_option("--jobs", opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
    app.add_option("--budget", opts.budget,
                   "element-count cap for finite-ring enumeration");

    auto* c_delta = app.add_subcommand("delta", "delta, Disc, nu, [O:Lambda], d_E per torus");
    c_delta->add_option("--config", config_path, "config file")->required();
    auto* c_disc = app.add_subcommand("disc", "disc_K per torus with the d-mode flag");
    c_disc->add_option("--config", config_path, "config file")->required();
    auto* c_verify = app.add_subcommand("verify-thm51",
                                        "delta vs disc over a family, with fitted witnesses");
    c_verify->add_option("--config", config_path, "config file")->required();
    auto* c_classify = app.add_subcommand("classify", "fixed-lattice classes for GL(N)");
    c_classify->add_option("N", classify_n, "degree")->required();
    auto* c_eyext = app.add_subcommand("eyext", "local index scan over a (torus, p) family");
    c_eyext->add_option("--config", config_path, "config file")->required();

    for (auto* sub : {c_delta, c_disc, c_verify, c_classify, c_eyext})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    opts.format = format;

    try {
        CommandResult res;
        if (*c_classify) {
            res = cmd_classify(classify_n, opts);
        } else {
            Config cfg = parse_config(read_file(config_path));
            if (*c_delta) res = cmd_delta(cfg, opts);
            else if (*c_disc) res = cmd_disc(cfg, opts);
            else if (*c_verify) res = cmd_verify_thm51(cfg, opts);
            else if (*c_eyext) res = cmd_eyext(cfg, opts);
        }
        return deliver(res, out_path);
    } catch (const modulus_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
