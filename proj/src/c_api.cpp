#include "dissrange.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dissrange/checkpoint.hpp"
#include "dissrange/harness.hpp"
#include "dissrange/spectral.hpp"

using namespace dissrange;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
dr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DR_OK;
    } catch (const BlowUpError& e) {
        g_last_error = e.what();
        return DR_ERR_BLOWUP;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DR_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return DR_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DR_ERR_IO;
    } catch (...) {
        g_last_error = "unknown error";
        return DR_ERR_INTERNAL;
    }
}

} // namespace

struct dr_config_impl {
    RunConfig config;
};

struct dr_field_impl {
    SpectralField field;
};

extern "C" {

const char* dr_status_name(dr_status status) {
    switch (status) {
        case DR_OK: return "ok";
        case DR_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case DR_ERR_IO: return "io-error";
        case DR_ERR_BLOWUP: return "blow-up-detected";
        case DR_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* dr_last_error(void) { return g_last_error.c_str(); }

const char* dr_version(void) { return "1.0.0"; }

void dr_free_string(char* s) { delete[] s; }

dr_status dr_config_create(dr_config* out) {
    if (!out) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new dr_config_impl{RunConfig::defaults()}; });
}

dr_status dr_config_load(const char* path, dr_config* out) {
    if (!path || !out) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new dr_config_impl{RunConfig::from_file(path)}; });
}

dr_status dr_config_set(dr_config cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::map<std::string, std::string> kv;
        // round-trip through the key table so unknown keys are rejected
        cfg->config = [&] {
            RunConfig base = cfg->config;
            nlohmann::json echo = base.to_json();
            for (auto it = echo.begin(); it != echo.end(); ++it)
                kv[it.key()] = it.value().get<std::string>();
            kv[key] = value;
            return RunConfig::from_map(kv);
        }();
    });
}

void dr_config_destroy(dr_config cfg) { delete cfg; }

dr_status dr_run(dr_config cfg, char** json_report) {
    if (!cfg || !json_report) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        nlohmann::json report = run(cfg->config);
        *json_report = dup_string(report.dump(2));
    });
}

dr_status dr_analyze(const char* const* checkpoint_paths, size_t count, dr_config cfg,
                     char** json_report) {
    if (!checkpoint_paths || count == 0 || !cfg || !json_report)
        return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<std::string> paths(checkpoint_paths, checkpoint_paths + count);
        TrajectoryRecord traj = trajectory_from_checkpoints(paths, cfg->config);
        RunConfig local = cfg->config;
        local.nu = traj.nu; // viscosity comes from the checkpoint header
        nlohmann::json report = monitor_report(traj, local);
        *json_report = dup_string(report.dump(2));
    });
}

dr_status dr_filters_csv(int n, char** csv) {
    if (!csv) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] { *csv = dup_string(filters_csv(n)); });
}

dr_status dr_selftest(char** report, int* passed) {
    if (!report || !passed) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool ok = false;
        const std::string text = selftest(ok);
        *report = dup_string(text);
        *passed = ok ? 1 : 0;
    });
}

dr_status dr_field_taylor_green(int n, double amplitude, dr_field* out) {
    if (!out) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new dr_field_impl{taylor_green(Grid::make(n), amplitude)};
    });
}

dr_status dr_field_read_checkpoint(const char* path, dr_field* out) {
    if (!path || !out) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        Checkpoint cp = read_checkpoint(path);
        *out = new dr_field_impl{std::move(cp.field)};
    });
}

dr_status dr_field_write_checkpoint(dr_field f, const char* path, double t, double nu) {
    if (!f || !path) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] { write_checkpoint(path, {t, nu, f->field}); });
}

void dr_field_destroy(dr_field f) { delete f; }

dr_status dr_field_energy(dr_field f, double* out) {
    if (!f || !out) return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = l2_sq(f->field); });
}

dr_status dr_field_lambda(dr_field f, double nu, double c0, double* lambda, int* q_index,
                          double* f_value, int* resolved) {
    if (!f || !lambda || !q_index || !f_value || !resolved)
        return DR_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const FilterBank bank(f->field.grid);
        DiagnosticsParams params;
        params.nu = nu;
        params.c0 = c0;
        params.c1 = 2.0 * c0;
        const DissipationState st = compute_lambda(f->field, bank, params);
        *lambda = st.lambda;
        *q_index = st.q_index;
        *f_value = st.f;
        *resolved = st.resolved ? 1 : 0;
    });
}

} // extern "C"
