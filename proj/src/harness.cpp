#include "dissrange/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dissrange/checkpoint.hpp"
#include "dissrange/random_fields.hpp"
#include "dissrange/spectral.hpp"

namespace dissrange {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

struct Key {
    const char* name;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

const std::vector<Key>& config_keys() {
    static const std::vector<Key> keys = {
        {"n", [](RunConfig& c, const std::string& v) { c.n = std::stoi(v); },
         [](const RunConfig& c) { return std::to_string(c.n); }},
        {"nu", [](RunConfig& c, const std::string& v) { c.nu = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.nu); }},
        {"dt", [](RunConfig& c, const std::string& v) { c.dt = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.dt); }},
        {"t_final", [](RunConfig& c, const std::string& v) { c.t_final = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.t_final); }},
        {"operator", [](RunConfig& c, const std::string& v) { c.operator_kind = v; },
         [](const RunConfig& c) { return c.operator_kind; }},
        {"sample_every",
         [](RunConfig& c, const std::string& v) { c.sample_every = std::stoi(v); },
         [](const RunConfig& c) { return std::to_string(c.sample_every); }},
        {"initial_condition",
         [](RunConfig& c, const std::string& v) { c.initial_condition = v; },
         [](const RunConfig& c) { return c.initial_condition; }},
        {"amplitude", [](RunConfig& c, const std::string& v) { c.amplitude = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.amplitude); }},
        {"shear_k", [](RunConfig& c, const std::string& v) { c.shear_k = std::stoi(v); },
         [](const RunConfig& c) { return std::to_string(c.shear_k); }},
        {"seed", [](RunConfig& c, const std::string& v) { c.seed = std::stoul(v); },
         [](const RunConfig& c) { return std::to_string(c.seed); }},
        {"band_slope", [](RunConfig& c, const std::string& v) { c.band_slope = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.band_slope); }},
        {"band_kmin", [](RunConfig& c, const std::string& v) { c.band_kmin = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.band_kmin); }},
        {"band_kmax", [](RunConfig& c, const std::string& v) { c.band_kmax = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.band_kmax); }},
        {"c0", [](RunConfig& c, const std::string& v) { c.c0 = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.c0); }},
        {"c1", [](RunConfig& c, const std::string& v) { c.c1 = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.c1); }},
        {"eps_exp", [](RunConfig& c, const std::string& v) { c.eps_exp = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.eps_exp); }},
        {"gronwall_s", [](RunConfig& c, const std::string& v) { c.gronwall_s = std::stod(v); },
         [](const RunConfig& c) { return fmt17(c.gronwall_s); }},
        {"monitors", [](RunConfig& c, const std::string& v) { c.monitors = v; },
         [](const RunConfig& c) { return c.monitors; }},
        {"lambda_p_list", [](RunConfig& c, const std::string& v) { c.lambda_p_list = v; },
         [](const RunConfig& c) { return c.lambda_p_list; }},
        {"lps_r_list", [](RunConfig& c, const std::string& v) { c.lps_r_list = v; },
         [](const RunConfig& c) { return c.lps_r_list; }},
        {"output_csv", [](RunConfig& c, const std::string& v) { c.output_csv = v; },
         [](const RunConfig& c) { return c.output_csv; }},
        {"output_json", [](RunConfig& c, const std::string& v) { c.output_json = v; },
         [](const RunConfig& c) { return c.output_json; }},
        {"checkpoint_every",
         [](RunConfig& c, const std::string& v) { c.checkpoint_every = std::stoi(v); },
         [](const RunConfig& c) { return std::to_string(c.checkpoint_every); }},
        {"checkpoint_prefix",
         [](RunConfig& c, const std::string& v) { c.checkpoint_prefix = v; },
         [](const RunConfig& c) { return c.checkpoint_prefix; }},
    };
    return keys;
}

const Key* find_key(const std::string& name) {
    for (const auto& k : config_keys())
        if (name == k.name) return &k;
    return nullptr;
}

} // namespace

RunConfig RunConfig::from_map(const std::map<std::string, std::string>& kv) {
    RunConfig c;
    for (const auto& [key, value] : kv) {
        const Key* k = find_key(key);
        if (!k) throw std::invalid_argument("RunConfig: unknown key '" + key + "'");
        k->set(c, value);
    }
    if (!kv.count("c1")) c.c1 = 2.0 * c.c0; // default coupling c1 = 2 c0
    c.apply_env_overrides();
    return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("RunConfig: cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("RunConfig: bad line " + std::to_string(lineno) +
                                     " in " + path);
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return from_map(kv);
}

void RunConfig::apply_env_overrides() {
    for (const auto& k : config_keys()) {
        std::string env = "DISSRANGE_";
        for (const char* p = k.name; *p; ++p)
            env += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
        if (const char* v = std::getenv(env.c_str())) k.set(*this, v);
    }
}

DiagnosticsParams RunConfig::diagnostics_params() const {
    DiagnosticsParams p;
    p.nu = nu;
    p.c0 = c0;
    p.c1 = c1;
    p.validate();
    return p;
}

DissipationOperator RunConfig::dissipation_operator() const {
    DissipationOperator op;
    op.nu = nu;
    if (operator_kind == "standard")
        op.kind = DissipationKind::Standard;
    else if (operator_kind == "hyper")
        op.kind = DissipationKind::Hyper;
    else if (operator_kind == "none")
        op.kind = DissipationKind::None;
    else
        throw std::invalid_argument("RunConfig: unknown operator '" + operator_kind + "'");
    return op;
}

bool RunConfig::has_monitor(const std::string& name) const {
    std::stringstream ss(monitors);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (trim(tok) == name) return true;
    return false;
}

json RunConfig::to_json() const {
    json j;
    for (const auto& k : config_keys()) j[k.name] = k.get(*this);
    return j;
}

namespace {

SpectralField initial_field(const RunConfig& c, const Grid& grid) {
    if (c.initial_condition == "taylor_green") return taylor_green(grid, c.amplitude);
    if (c.initial_condition == "single_shear")
        return single_shear(grid, c.amplitude, c.shear_k);
    if (c.initial_condition == "random_band")
        return random_band_field(grid, c.seed, c.band_slope, c.band_kmin, c.band_kmax,
                                 c.amplitude);
    throw std::invalid_argument("RunConfig: unknown initial_condition '" +
                                c.initial_condition + "'");
}

TrajectorySample make_sample(const SpectralField& u, double t, const FilterBank& bank,
                             const DiagnosticsParams& params, const DissipationOperator& op,
                             double hs_index, double diss_integral,
                             const SpectralField* prev, bool want_jump) {
    TrajectorySample s;
    s.state = (op.kind == DissipationKind::Hyper) ? hyper_lambda(u, bank, params)
                                                  : compute_lambda(u, bank, params);
    s.state.t = t;
    s.energy = l2_sq(u);
    s.grad_l2_sq = gradient_l2_sq(u);
    s.hs_norm = sobolev_norm(u, hs_index);
    s.du_l2_sq = du_l2_sq(u, op);
    s.dissipation_integral = diss_integral;
    if (s.energy > 0.0) {
        const double top = s.state.shell_l2.back();
        s.top_shell_energy_fraction = top * top / s.energy;
    }
    if (prev && want_jump) {
        SpectralField diff = u;
        diff -= *prev;
        s.jump_bminf = besov_norm(diff, bank, -1.0, kInfExponent);
    }
    return s;
}

} // namespace

double bminf_jump(const SpectralField& a, const SpectralField& b, const FilterBank& bank) {
    SpectralField diff = a;
    diff -= b;
    return besov_norm(diff, bank, -1.0, kInfExponent);
}

TrajectoryRecord run_trajectory(const RunConfig& config) {
    const Grid grid = Grid::make(config.n);
    const FilterBank bank(grid);
    const DiagnosticsParams params = config.diagnostics_params();
    const DissipationOperator op = config.dissipation_operator();
    const bool want_jump = config.has_monitor("jump");

    SpectralField u = initial_field(config, grid);
    double t = 0.0;
    double diss = 0.0;
    long step_count = 0;

    TrajectoryRecord traj;
    traj.nu = config.nu;
    traj.hs_index = config.gronwall_s;
    traj.grid_n = config.n;
    traj.samples.push_back(
        make_sample(u, t, bank, params, op, config.gronwall_s, diss, nullptr, false));
    SpectralField prev_sampled = u;

    if (config.checkpoint_every > 0)
        write_checkpoint(config.checkpoint_prefix + "_000000.drng", {t, config.nu, u});

    const double t_end = config.t_final;
    long checkpoint_index = 1;
    while (t < t_end - 1e-12) {
        const double limit = cfl_limit(u);
        const double dt = std::min({config.dt, limit, t_end - t});
        if (!(dt > 1e-12)) {
            traj.truncated = true;
            break;
        }
        try {
            u = step(u, dt, op, &diss);
        } catch (const BlowUpError&) {
            traj.truncated = true;
            break;
        } catch (const CflError&) {
            traj.truncated = true;
            break;
        }
        t += dt;
        ++step_count;
        const bool last = t >= t_end - 1e-12;
        if (step_count % config.sample_every == 0 || last) {
            traj.samples.push_back(make_sample(u, t, bank, params, op, config.gronwall_s,
                                               diss, &prev_sampled, want_jump));
            prev_sampled = u;
        }
        if (config.checkpoint_every > 0 &&
            (step_count % config.checkpoint_every == 0 || last)) {
            char suffix[32];
            std::snprintf(suffix, sizeof(suffix), "_%06ld.drng", checkpoint_index++);
            write_checkpoint(config.checkpoint_prefix + suffix, {t, config.nu, u});
        }
    }
    return traj;
}

TrajectoryRecord trajectory_from_checkpoints(const std::vector<std::string>& paths,
                                             const RunConfig& config) {
    if (paths.empty()) throw std::invalid_argument("analyze: no checkpoints given");
    TrajectoryRecord traj;
    traj.hs_index = config.gronwall_s;
    const DissipationOperator op = config.dissipation_operator();
    const bool want_jump = config.has_monitor("jump");

    std::unique_ptr<FilterBank> bank;
    std::unique_ptr<SpectralField> prev;
    DiagnosticsParams params = config.diagnostics_params();
    double diss = 0.0;
    double prev_grad = 0.0, prev_t = 0.0;
    for (const auto& path : paths) {
        Checkpoint cp = read_checkpoint(path);
        if (!bank) {
            bank.reset(new FilterBank(cp.field.grid));
            params.nu = cp.nu;
            traj.nu = cp.nu;
            traj.grid_n = cp.field.grid.n;
        }
        const double grad = gradient_l2_sq(cp.field);
        if (prev) diss += 0.5 * (prev_grad + grad) * (cp.t - prev_t); // trapezoid fallback
        traj.samples.push_back(make_sample(cp.field, cp.t, *bank, params, op,
                                           config.gronwall_s, diss, prev.get(), want_jump));
        prev.reset(new SpectralField(cp.field));
        prev_grad = grad;
        prev_t = cp.t;
    }
    return traj;
}

namespace {

json lambda_lp_monitor(const TrajectoryRecord& traj, const std::vector<double>& plist,
                       const RunConfig& config) {
    json out;
    int unresolved = 0;
    for (const auto& s : traj.samples)
        if (!s.state.resolved) ++unresolved;
    out["unresolved_samples"] = unresolved;
    for (double p : plist) {
        double sum = 0.0;
        for (size_t i = 0; i + 1 < traj.samples.size(); ++i) {
            const auto& a = traj.samples[i].state;
            const auto& b = traj.samples[i + 1].state;
            if (!a.lambda_finite() || !b.lambda_finite()) continue;
            sum += 0.5 * (std::pow(a.lambda, p) + std::pow(b.lambda, p)) *
                   (b.t - a.t);
        }
        out["p=" + fmt17(p)] = sum;
    }
    // Lemma chain ingredients: c0 nu int_U Lambda vs int_U Lambda^2 (||u_Q||_2/V)^2
    std::vector<double> lam(traj.samples.size()), rhs(traj.samples.size());
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& st = traj.samples[i].state;
        lam[i] = st.lambda_finite() ? st.lambda : 0.0;
        if (st.lambda_finite() && st.lambda > 1.0) {
            const double l2n = st.shell_l2[st.q_index + 1] / volume_sqrt();
            rhs[i] = st.lambda * st.lambda * l2n * l2n;
        }
    }
    out["int_U_lambda"] = time_integral_U(traj, lam);
    out["int_U_lambda2_uQ2"] = time_integral_U(traj, rhs);
    out["c0_nu"] = config.c0 * config.nu;
    return out;
}

json energy_budget_monitor(const TrajectoryRecord& traj, const RunConfig& config) {
    json out;
    if (traj.samples.empty()) return out;
    const double e0 = traj.samples.front().energy;
    double worst = 0.0;
    for (const auto& s : traj.samples) {
        const double defect =
            config.nu > 0.0
                ? (s.energy + 2.0 * config.nu * s.dissipation_integral - e0) / e0
                : (s.energy - e0) / e0;
        worst = std::max(worst, std::abs(defect));
    }
    out["max_relative_defect"] = worst;
    out["initial_energy"] = e0;
    out["final_energy"] = traj.samples.back().energy;
    return out;
}

json hyper_e_monitor(const TrajectoryRecord& traj, const RunConfig& config) {
    json out;
    const DiagnosticsParams params = config.diagnostics_params();
    std::vector<double> e(traj.samples.size()), du(traj.samples.size());
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        e[i] = shell_energy(traj.samples[i].state.shell_l2, config.eps_exp);
        du[i] = traj.samples[i].du_l2_sq;
    }
    out["E_initial"] = e.empty() ? 0.0 : e.front();
    out["E_final"] = e.empty() ? 0.0 : e.back();
    out["E_max"] = e.empty() ? 0.0 : *std::max_element(e.begin(), e.end());
    out["du_l2sq_integral"] = time_integral(traj, du);
    // smallest C with (1/2) dE/dt <= C log(2 + E/(c0 nu)) ||Du||^2 E
    double c = 0.0;
    for (size_t i = 1; i + 1 < traj.samples.size(); ++i) {
        const double dt2 = traj.samples[i + 1].state.t - traj.samples[i - 1].state.t;
        const double lhs = 0.5 * (e[i + 1] - e[i - 1]) / dt2;
        const double rhs =
            std::log(2.0 + e[i] / (params.c0 * params.nu)) * du[i] * e[i];
        if (lhs > 0.0 && rhs > 0.0) c = std::max(c, lhs / rhs);
    }
    out["C"] = c;
    return out;
}

} // namespace

json monitor_report(const TrajectoryRecord& traj, const RunConfig& config) {
    const Grid grid = Grid::make(traj.grid_n > 0 ? traj.grid_n : config.n);
    const FilterBank bank(grid);
    const DiagnosticsParams params = config.diagnostics_params();

    json report;
    report["config"] = config.to_json();

    json constants;
    constants["C_B"] = measure_bernstein_constant(grid, bank, 777);
    constants["partition_residual"] = bank.partition_residual();
    constants["hyper_crossover"] = hyper_crossover(grid);
    constants["q_max"] = bank.q_max();

    json flags;
    flags["truncated"] = traj.truncated;
    flags["any_unresolved"] = traj.any_unresolved();
    double top_frac = 0.0;
    for (const auto& s : traj.samples)
        top_frac = std::max(top_frac, s.top_shell_energy_fraction);
    flags["under_resolved"] = top_frac > 1e-6;
    flags["max_top_shell_energy_fraction"] = top_frac;

    json monitors;
    if (config.has_monitor("bkm_integral")) {
        std::vector<double> fv(traj.samples.size()), f(traj.samples.size());
        for (size_t i = 0; i < traj.samples.size(); ++i) {
            fv[i] = traj.samples[i].state.f_vort;
            f[i] = traj.samples[i].state.f;
        }
        json m;
        m["vorticity_form"] = time_integral(traj, fv);
        m["f_integral"] = time_integral(traj, f);
        m["truncated"] = traj.truncated;
        monitors["bkm_integral"] = m;
    }
    if (config.has_monitor("lambda_Lp"))
        monitors["lambda_Lp"] = lambda_lp_monitor(traj, parse_list(config.lambda_p_list),
                                                  config);
    if (config.has_monitor("lps_norm")) {
        json m;
        for (double r : parse_list(config.lps_r_list)) {
            if (r < 1.0) throw std::invalid_argument("lps_norm: r must be >= 1");
            std::vector<double> g(traj.samples.size());
            for (size_t i = 0; i < traj.samples.size(); ++i) {
                const double b =
                    besov_from_shells(traj.samples[i].state.shell_linf, 2.0 / r - 1.0);
                g[i] = std::pow(b, r);
            }
            m["r=" + fmt17(r)] = std::pow(time_integral(traj, g), 1.0 / r);
        }
        monitors["lps_norm"] = m;
    }
    if (config.has_monitor("jump") && config.nu > 0.0 && traj.samples.size() >= 2) {
        const JumpReport jr = jump_monitor(traj, params);
        json m;
        m["max_jump"] = jr.max_jump;
        m["below_c1_nu"] = jr.below_threshold;
        m["surrogate"] = "consecutive-sample maximum";
        monitors["jump"] = m;
    }
    if (config.has_monitor("gronwall") && traj.samples.size() >= 3) {
        json m;
        m["C"] = gronwall_residual(traj);
        m["s"] = config.gronwall_s;
        monitors["gronwall"] = m;
    }
    if (config.has_monitor("turbulence_summary") && config.nu > 0.0) {
        json m;
        try {
            const TurbulenceSummary ts = intermittency_exponent(traj, params);
            m["epsilon"] = ts.epsilon;
            m["kappa_d"] = ts.kappa;
            m["s_exponent"] = ts.s_exponent;
            m["d_dimension"] = ts.d_dimension;
            m["mean_lambda"] = ts.mean_lambda;
            m["mean_lambda_U"] = ts.mean_lambda_U;
            m["ratio_mean"] = ts.ratio_mean;
            m["ratio_mean_U"] = ts.ratio_mean_U;
            m["d_above_3_2"] = ts.d_dimension > 1.5;
            m["applicable"] = true;
        } catch (const std::exception& e) {
            m["applicable"] = false;
            m["reason"] = e.what();
        }
        monitors["turbulence_summary"] = m;
    }
    if (config.has_monitor("energy_budget"))
        monitors["energy_budget"] = energy_budget_monitor(traj, config);
    if (config.has_monitor("hyper_E") ||
        config.dissipation_operator().kind == DissipationKind::Hyper)
        monitors["hyper_E"] = hyper_e_monitor(traj, config);

    report["constants"] = constants;
    report["flags"] = flags;
    report["monitors"] = monitors;
    return report;
}

std::string trajectory_csv(const TrajectoryRecord& traj) {
    std::string out = "t,energy,grad_l2,Lambda,Q,f,f_vort,s_inst,resolved\n";
    for (const auto& s : traj.samples) {
        out += fmt17(s.state.t) + "," + fmt17(s.energy) + "," + fmt17(s.grad_l2_sq) + "," +
               fmt17(s.state.lambda) + "," + std::to_string(s.state.q_index) + "," +
               fmt17(s.state.f) + "," + fmt17(s.state.f_vort) + "," +
               fmt17(s.state.s_inst) + "," + (s.state.resolved ? "1" : "0") + "\n";
    }
    return out;
}

json run(const RunConfig& config) {
    TrajectoryRecord traj = run_trajectory(config);
    json report = monitor_report(traj, config);
    if (!config.output_csv.empty()) {
        std::ofstream os(config.output_csv, std::ios::binary);
        if (!os) throw std::runtime_error("run: cannot open " + config.output_csv);
        os << trajectory_csv(traj);
    }
    if (!config.output_json.empty()) {
        std::ofstream os(config.output_json, std::ios::binary);
        if (!os) throw std::runtime_error("run: cannot open " + config.output_json);
        os << report.dump(2) << "\n";
    }
    return report;
}

std::string filters_csv(int n) {
    const Grid grid = Grid::make(n);
    const FilterBank bank(grid);
    const int kmax = static_cast<int>(std::ceil(std::sqrt(3.0) * grid.dealias_cutoff));
    std::string out = "q,lambda,kmag,weight\n";
    for (int q = -1; q <= bank.q_max(); ++q) {
        for (int k = 0; k <= kmax; ++k) {
            const double w = q == -1 ? chi(static_cast<double>(k))
                                     : phi(q, static_cast<double>(k));
            out += std::to_string(q) + "," + fmt17(FilterBank::lambda(q)) + "," +
                   std::to_string(k) + "," + fmt17(w) + "\n";
        }
    }
    return out;
}

std::string selftest(bool& ok) {
    ok = true;
    std::ostringstream os;
    auto check = [&](const std::string& name, bool pass, double value) {
        os << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << fmt17(value) << ")\n";
        if (!pass) ok = false;
    };

    const Grid grid = Grid::make(32);
    const FilterBank bank(grid);

    check("filter partition residual <= 1e-12", bank.partition_residual() <= 1e-12,
          bank.partition_residual());

    SpectralField u = random_band_field(grid, 42, 5.0 / 3.0, 1.0, 8.0, 1.0);
    {
        const PhysicalField f = inverse_transform(u);
        SpectralField u2 = forward_transform(f);
        u2 -= u;
        const double err = l2_norm(u2) / l2_norm(u);
        check("transform round-trip <= 1e-12", err <= 1e-12, err);
    }
    {
        SpectralField p1 = leray_project(u);
        SpectralField p2 = leray_project(p1);
        p2 -= p1;
        const double err = l2_norm(p2) / l2_norm(p1);
        check("leray idempotence <= 1e-14", err <= 1e-14, err);
    }
    {
        SpectralField sum(grid);
        for (int q = -1; q <= bank.q_max(); ++q) sum += bank.shell_project(u, q);
        sum -= u;
        const double err = l2_norm(sum) / l2_norm(u);
        check("shell reconstruction <= 1e-10", err <= 1e-10, err);
    }
    {
        DiagnosticsParams params;
        params.nu = 0.01;
        params.c0 = 0.1;
        bool exact = true;
        for (int s = 0; s < 10; ++s) {
            SpectralField v = random_band_field(grid, 100 + s, 5.0 / 3.0, 1.0, 9.0, 2.0);
            const DissipationState st = compute_lambda(v, bank, params);
            if (st.lambda_finite() && st.lambda > 1.0) {
                if (!(st.shell_linf[st.q_index + 1] >= params.c0 * params.nu * st.lambda))
                    exact = false;
                for (int p = st.q_index + 1; p <= bank.q_max(); ++p)
                    if (!(st.shell_linf[p + 1] / FilterBank::lambda(p) <
                          params.c0 * params.nu))
                        exact = false;
            }
        }
        check("dissipation wavenumber definitional exactness", exact, exact ? 1.0 : 0.0);
    }
    {
        const double nu = 0.05;
        const int kk = 4;
        DissipationOperator op{DissipationKind::Standard, nu};
        SpectralField v = single_shear(grid, 1.0, kk);
        const double dt = 0.01;
        for (int i = 0; i < 20; ++i) v = step(v, dt, op);
        const double expected = std::exp(-nu * kk * kk * 20 * dt);
        const double got = std::abs(v.mode(1, kk, 0, 0)) / 0.5;
        const double err = std::abs(got - expected) / expected;
        check("single-mode heat decay <= 1e-10", err <= 1e-10, err);
    }
    return os.str();
}

} // namespace dissrange
