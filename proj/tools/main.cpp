// Command-line front end. Links only the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dissrange.h"

namespace {

int fail(dr_status status) {
    std::fprintf(stderr, "error (%s): %s\n", dr_status_name(status), dr_last_error());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissrange: pseudo-spectral Navier-Stokes solver with "
                 "dissipation-range diagnostics"};
    app.require_subcommand(1);

    // run
    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "solve and evaluate monitors");
    run_cmd->add_option("config", config_path, "key=value config file")->required();
    bool print_report = false;
    run_cmd->add_flag("--print-report", print_report, "dump the JSON report to stdout");

    // analyze
    std::vector<std::string> checkpoints;
    std::string monitors;
    auto* an_cmd = app.add_subcommand("analyze", "diagnostics over checkpoints");
    an_cmd->add_option("checkpoints", checkpoints, "checkpoint files, in time order")
        ->required();
    an_cmd->add_option("--monitors", monitors, "comma-separated monitor list");

    // filters
    int grid_n = 64;
    auto* fl_cmd = app.add_subcommand("filters", "dump the filter bank");
    fl_cmd->add_option("--grid", grid_n, "grid size N")->required();

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the invariant suite");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        dr_config cfg = nullptr;
        dr_status st = dr_config_load(config_path.c_str(), &cfg);
        if (st != DR_OK) return fail(st);
        char* report = nullptr;
        st = dr_run(cfg, &report);
        dr_config_destroy(cfg);
        if (st != DR_OK) return fail(st);
        if (print_report) std::printf("%s\n", report);
        dr_free_string(report);
        return 0;
    }

    if (an_cmd->parsed()) {
        dr_config cfg = nullptr;
        dr_status st = dr_config_create(&cfg);
        if (st != DR_OK) return fail(st);
        if (!monitors.empty()) {
            st = dr_config_set(cfg, "monitors", monitors.c_str());
            if (st != DR_OK) {
                dr_config_destroy(cfg);
                return fail(st);
            }
        }
        std::vector<const char*> paths;
        for (const auto& p : checkpoints) paths.push_back(p.c_str());
        char* report = nullptr;
        st = dr_analyze(paths.data(), paths.size(), cfg, &report);
        dr_config_destroy(cfg);
        if (st != DR_OK) return fail(st);
        std::printf("%s\n", report);
        dr_free_string(report);
        return 0;
    }

    if (fl_cmd->parsed()) {
        char* csv = nullptr;
        const dr_status st = dr_filters_csv(grid_n, &csv);
        if (st != DR_OK) return fail(st);
        std::printf("%s", csv);
        dr_free_string(csv);
        return 0;
    }

    if (st_cmd->parsed()) {
        char* report = nullptr;
        int passed = 0;
        const dr_status st = dr_selftest(&report, &passed);
        if (st != DR_OK) return fail(st);
        std::printf("%s", report);
        dr_free_string(report);
        return passed ? 0 : 1;
    }

    return 1;
}
