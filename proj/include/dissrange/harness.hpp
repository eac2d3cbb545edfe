#ifndef DISSRANGE_HARNESS_HPP
#define DISSRANGE_HARNESS_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dissrange/solver.hpp"

namespace dissrange {

// Flat key=value run configuration. Unknown keys are rejected; every key has
// a default. Environment variables DISSRANGE_<KEY> override file values.
struct RunConfig {
    int n = 64;
    double nu = 0.01;
    double dt = 0.02;            // upper bound; the CFL condition may shrink it
    double t_final = 5.0;
    std::string operator_kind = "standard"; // standard | hyper | none
    int sample_every = 10;       // diagnostic cadence in steps
    std::string initial_condition = "taylor_green"; // | single_shear | random_band
    double amplitude = 1.0;
    int shear_k = 1;
    unsigned long seed = 1;
    double band_slope = 1.6666666666666667;
    double band_kmin = 1.0;
    double band_kmax = 8.0;
    double c0 = 0.1;
    double c1 = 0.2;
    double eps_exp = 0.5;
    double gronwall_s = 3.0;
    std::string monitors =
        "bkm_integral,lambda_Lp,lps_norm,jump,gronwall,turbulence_summary,energy_budget";
    std::string lambda_p_list = "1,2,2.5";
    std::string lps_r_list = "2";
    std::string output_csv;
    std::string output_json;
    int checkpoint_every = 0;    // steps between checkpoints, 0 = off
    std::string checkpoint_prefix = "checkpoint";

    static RunConfig defaults() { return RunConfig{}; }
    static RunConfig from_file(const std::string& path);
    static RunConfig from_map(const std::map<std::string, std::string>& kv);
    void apply_env_overrides();

    DiagnosticsParams diagnostics_params() const;
    DissipationOperator dissipation_operator() const;
    bool has_monitor(const std::string& name) const;

    nlohmann::json to_json() const;
};

// Solve from t = 0 to t_final, recording diagnostics every sample_every
// steps (plus the initial and final states). Adaptive dt under the CFL bound.
TrajectoryRecord run_trajectory(const RunConfig& config);

// Build a trajectory from existing checkpoints (scalar diagnostics only; the
// dissipation integral falls back to trapezoidal quadrature).
TrajectoryRecord trajectory_from_checkpoints(const std::vector<std::string>& paths,
                                             const RunConfig& config);

// Evaluate the configured monitors over a completed trajectory.
nlohmann::json monitor_report(const TrajectoryRecord& traj, const RunConfig& config);

// Full run: solve, monitors, optional CSV/JSON/checkpoint outputs.
nlohmann::json run(const RunConfig& config);

std::string trajectory_csv(const TrajectoryRecord& traj);

// Filter bank dump for inspection: one row per (shell, integer |k|).
std::string filters_csv(int n);

// Execute the invariant suite at small scale; returns one line per check.
// `ok` is false if any check failed.
std::string selftest(bool& ok);

// Max over consecutive pairs handled during runs; exposed for analyze mode.
double bminf_jump(const SpectralField& a, const SpectralField& b, const FilterBank& bank);

} // namespace dissrange

#endif
