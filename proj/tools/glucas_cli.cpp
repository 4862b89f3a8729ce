#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "glucas/scenario.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    bool has_seed = false;
    std::uint64_t seed = 0;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "scenario config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "seed override")->each([&](const std::string&) {
        args.has_seed = true;
    });
    cmd->add_flag("--quiet", args.quiet, "suppress report echo");
}

int run_command(const CommonArgs& args, const char* expected_mode) {
    std::ifstream in(args.config_path);
    if (!in) {
        std::cerr << "error: cannot open config " << args.config_path << "\n";
        return 3;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    glucas::ParseResult parsed = glucas::parse_config(buf.str());
    if (!parsed.ok()) {
        for (const auto& d : parsed.diagnostics) {
            std::cerr << args.config_path << ":" << d.line << ": " << d.message << "\n";
        }
        return 3;
    }
    glucas::ScenarioConfig cfg = *parsed.config;
    if (expected_mode && std::string(glucas::to_string(cfg.mode)) != expected_mode) {
        std::cerr << "error: config mode is " << glucas::to_string(cfg.mode) << ", expected "
                  << expected_mode << "\n";
        return 3;
    }
    if (args.has_seed) cfg.seed = args.seed;

    std::string out = args.out_dir;
    if (out.empty()) out = cfg.out;
    if (out.empty()) {
        if (const char* env = std::getenv("GLUCAS_OUT")) out = env;
    }
    if (out.empty()) out = "out/" + cfg.id;

    try {
        glucas::RunResult res = glucas::run_scenario(cfg, out);
        if (!args.quiet) std::cout << glucas::render_report(res.report, cfg);
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-Lucas verification toolkit for canonical products"};
    app.require_subcommand(1);

    CommonArgs run_args, rearrange_args, sephull_args, stability_args;
    CLI::App* run = app.add_subcommand("run", "run any scenario config");
    add_common(run, run_args);
    CLI::App* rearrange = app.add_subcommand("rearrange", "run a rearrange scenario");
    add_common(rearrange, rearrange_args);
    CLI::App* sephull = app.add_subcommand("sep-hull", "run a sep-hull scenario");
    add_common(sephull, sephull_args);
    CLI::App* stability = app.add_subcommand("stability", "run a stability scenario");
    add_common(stability, stability_args);

    std::string report_dir;
    CLI::App* report = app.add_subcommand("report", "print the report of a previous run");
    report->add_option("--out", report_dir, "output directory of the run")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(run_args, nullptr);
    if (rearrange->parsed()) return run_command(rearrange_args, "rearrange");
    if (sephull->parsed()) return run_command(sephull_args, "sep-hull");
    if (stability->parsed()) return run_command(stability_args, "stability");
    if (report->parsed()) {
        std::ifstream in(report_dir + "/report.txt");
        if (!in) {
            std::cerr << "error: no report.txt under " << report_dir << "\n";
            return 3;
        }
        std::cout << in.rdbuf();
        return 0;
    }
    return 3;
}
