#ifndef DISSRANGE_H
#define DISSRANGE_H

/* C API for the dissipation-range diagnostics library.
 *
 * All functions return a dr_status; every out-parameter is written only on
 * DR_OK. Strings and handles returned by the library are owned by the caller
 * and must be released with dr_free_string / the matching *_destroy call.
 * Handles are opaque and not thread-safe for concurrent mutation. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dr_status {
    DR_OK = 0,
    DR_ERR_INVALID_ARGUMENT = 1,
    DR_ERR_IO = 2,
    DR_ERR_BLOWUP = 3,
    DR_ERR_INTERNAL = 4
} dr_status;

const char* dr_status_name(dr_status status);

/* Message of the most recent failure on this thread; empty string if none. */
const char* dr_last_error(void);

const char* dr_version(void);

void dr_free_string(char* s);

/* ---- run configuration ---- */

typedef struct dr_config_impl* dr_config;

dr_status dr_config_create(dr_config* out);
dr_status dr_config_load(const char* path, dr_config* out);
dr_status dr_config_set(dr_config cfg, const char* key, const char* value);
void dr_config_destroy(dr_config cfg);

/* ---- full pipeline ---- */

/* Solve + diagnostics + monitors. Writes CSV/JSON/checkpoint files when the
 * config names them. On success *json_report is a NUL-terminated JSON
 * document (free with dr_free_string). */
dr_status dr_run(dr_config cfg, char** json_report);

/* Diagnostics over existing checkpoint files, in the order given. */
dr_status dr_analyze(const char* const* checkpoint_paths, size_t count,
                     dr_config cfg, char** json_report);

/* Littlewood-Paley filter bank dump as CSV text. */
dr_status dr_filters_csv(int n, char** csv);

/* Invariant suite at small scale. *passed is 1 when every check passed. */
dr_status dr_selftest(char** report, int* passed);

/* ---- field-level entry points (diagnostics on one snapshot) ---- */

typedef struct dr_field_impl* dr_field;

dr_status dr_field_taylor_green(int n, double amplitude, dr_field* out);
dr_status dr_field_read_checkpoint(const char* path, dr_field* out);
dr_status dr_field_write_checkpoint(dr_field f, const char* path, double t, double nu);
void dr_field_destroy(dr_field f);

dr_status dr_field_energy(dr_field f, double* out);

/* Dissipation wavenumber scan of one snapshot; lambda is HUGE_VAL when the
 * wavenumber is infinite (inviscid or unresolved). */
dr_status dr_field_lambda(dr_field f, double nu, double c0, double* lambda,
                          int* q_index, double* f_value, int* resolved);

#ifdef __cplusplus
}
#endif

#endif /* DISSRANGE_H */
