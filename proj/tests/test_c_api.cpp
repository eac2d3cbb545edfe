#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "dissrange.h"

TEST_CASE("status names and version") {
    CHECK(std::strcmp(dr_status_name(DR_OK), "ok") == 0);
    CHECK(std::strcmp(dr_status_name(DR_ERR_INVALID_ARGUMENT), "invalid-argument") == 0);
    CHECK(std::strcmp(dr_status_name(DR_ERR_IO), "io-error") == 0);
    CHECK(std::strcmp(dr_status_name(DR_ERR_BLOWUP), "blow-up-detected") == 0);
    CHECK(dr_version() != nullptr);
    CHECK(dr_last_error() != nullptr);
}

TEST_CASE("config lifecycle and key validation") {
    dr_config cfg = nullptr;
    REQUIRE(dr_config_create(&cfg) == DR_OK);
    CHECK(dr_config_set(cfg, "n", "16") == DR_OK);
    CHECK(dr_config_set(cfg, "nu", "0.05") == DR_OK);
    CHECK(dr_config_set(cfg, "no_such_key", "1") == DR_ERR_INVALID_ARGUMENT);
    CHECK(std::string(dr_last_error()).find("no_such_key") != std::string::npos);
    CHECK(dr_config_set(cfg, "n", "not_a_number") == DR_ERR_INVALID_ARGUMENT);
    CHECK(dr_config_set(nullptr, "n", "16") == DR_ERR_INVALID_ARGUMENT);
    dr_config_destroy(cfg);

    CHECK(dr_config_load("/nonexistent/path", &cfg) == DR_ERR_IO);
}

TEST_CASE("full run through the C surface") {
    dr_config cfg = nullptr;
    REQUIRE(dr_config_create(&cfg) == DR_OK);
    REQUIRE(dr_config_set(cfg, "n", "16") == DR_OK);
    REQUIRE(dr_config_set(cfg, "nu", "0.05") == DR_OK);
    REQUIRE(dr_config_set(cfg, "t_final", "0.1") == DR_OK);
    REQUIRE(dr_config_set(cfg, "sample_every", "2") == DR_OK);
    char* report = nullptr;
    REQUIRE(dr_run(cfg, &report) == DR_OK);
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("\"monitors\"") != std::string::npos);
    dr_free_string(report);
    dr_config_destroy(cfg);
}

TEST_CASE("field snapshot entry points") {
    dr_field f = nullptr;
    REQUIRE(dr_field_taylor_green(16, 1.0, &f) == DR_OK);
    double e = 0.0;
    REQUIRE(dr_field_energy(f, &e) == DR_OK);
    const double pi = std::acos(-1.0);
    CHECK(e == doctest::Approx(std::pow(2.0 * pi, 3.0) / 4.0).epsilon(1e-12));

    double lambda = 0.0, fv = 0.0;
    int q = 0, resolved = 0;
    REQUIRE(dr_field_lambda(f, 0.0, 0.1, &lambda, &q, &fv, &resolved) == DR_OK);
    CHECK(lambda == HUGE_VAL);
    CHECK(q == -1);
    CHECK(resolved == 1);

    REQUIRE(dr_field_lambda(f, 1e-4, 0.1, &lambda, &q, &fv, &resolved) == DR_OK);
    CHECK(std::isfinite(lambda));
    CHECK(lambda >= 1.0);

    CHECK(dr_field_lambda(f, -1.0, 0.1, &lambda, &q, &fv, &resolved) ==
          DR_ERR_INVALID_ARGUMENT);
    CHECK(dr_field_taylor_green(13, 1.0, &f) == DR_ERR_INVALID_ARGUMENT);

    const char* path = "/tmp/dissrange_capi_cp.drng";
    REQUIRE(dr_field_write_checkpoint(f, path, 0.5, 0.01) == DR_OK);
    dr_field g = nullptr;
    REQUIRE(dr_field_read_checkpoint(path, &g) == DR_OK);
    double e2 = 0.0;
    REQUIRE(dr_field_energy(g, &e2) == DR_OK);
    CHECK(e2 == e);
    dr_field_destroy(g);
    dr_field_destroy(f);
    CHECK(dr_field_read_checkpoint("/nonexistent.drng", &g) == DR_ERR_IO);
    std::remove(path);
}

TEST_CASE("analyze over checkpoints written by a run") {
    dr_config cfg = nullptr;
    REQUIRE(dr_config_create(&cfg) == DR_OK);
    REQUIRE(dr_config_set(cfg, "n", "16") == DR_OK);
    REQUIRE(dr_config_set(cfg, "nu", "0.05") == DR_OK);
    REQUIRE(dr_config_set(cfg, "t_final", "0.08") == DR_OK);
    REQUIRE(dr_config_set(cfg, "sample_every", "2") == DR_OK);
    REQUIRE(dr_config_set(cfg, "checkpoint_every", "2") == DR_OK);
    REQUIRE(dr_config_set(cfg, "checkpoint_prefix", "/tmp/dissrange_capi") == DR_OK);
    char* report = nullptr;
    REQUIRE(dr_run(cfg, &report) == DR_OK);
    dr_free_string(report);

    std::string p0 = "/tmp/dissrange_capi_000000.drng";
    std::string p1 = "/tmp/dissrange_capi_000001.drng";
    std::string p2 = "/tmp/dissrange_capi_000002.drng";
    const char* paths[] = {p0.c_str(), p1.c_str(), p2.c_str()};
    char* analysis = nullptr;
    REQUIRE(dr_analyze(paths, 3, cfg, &analysis) == DR_OK);
    CHECK(std::string(analysis).find("\"monitors\"") != std::string::npos);
    dr_free_string(analysis);

    CHECK(dr_analyze(paths, 0, cfg, &analysis) == DR_ERR_INVALID_ARGUMENT);
    dr_config_destroy(cfg);
    for (const auto& p : {p0, p1, p2}) std::remove(p.c_str());
}

TEST_CASE("filter dump and selftest") {
    char* csv = nullptr;
    REQUIRE(dr_filters_csv(32, &csv) == DR_OK);
    CHECK(std::string(csv).rfind("q,lambda,kmag,weight\n", 0) == 0);
    dr_free_string(csv);
    CHECK(dr_filters_csv(13, &csv) == DR_ERR_INVALID_ARGUMENT);

    char* report = nullptr;
    int passed = 0;
    REQUIRE(dr_selftest(&report, &passed) == DR_OK);
    CHECK(passed == 1);
    dr_free_string(report);
}
