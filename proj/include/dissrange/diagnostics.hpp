#ifndef DISSRANGE_DIAGNOSTICS_HPP
#define DISSRANGE_DIAGNOSTICS_HPP

#include <cmath>
#include <vector>

#include "dissrange/filter_bank.hpp"
#include "dissrange/norms.hpp"

namespace dissrange {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// (2 pi)^{3/2}: volume normalization applied to L^2 norms wherever they are
// compared against L^inf norms, so that Bernstein-type constants come out O(1).
double volume_sqrt();

struct DiagnosticsParams {
    double nu = 0.01;  // viscosity, >= 0
    double c0 = 0.1;   // dissipation-wavenumber constant, > 0
    double c1 = 0.2;   // small-jump constant, default 2*c0

    void validate() const;
};

// Per-time diagnostics built from one velocity snapshot.
struct DissipationState {
    double t = 0.0;
    double lambda = 1.0;   // dissipation wavenumber, dyadic or inf
    int q_index = 0;       // Q with 2^Q = lambda; -1 when lambda is inf
    bool resolved = true;  // false when the defining scan hit the top shell
    double f = 0.0;        // sup_{q <= Q} lambda_q ||u_q||_inf
    double f_vort = 0.0;   // sup_{q <= Q} ||omega_q||_inf
    double s_inst = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> shell_linf;      // index q+1
    std::vector<double> shell_l2;        // index q+1
    std::vector<double> vort_shell_linf; // index q+1

    bool lambda_finite() const { return std::isfinite(lambda); }
};

// Scan of the defining condition: smallest q >= 0 such that
// lambda_p^{-1} ||u_p||_inf < c0 nu for every resolved p > q.
// nu = 0 gives lambda = inf; a violation at the top shell gives lambda = inf
// with resolved = false.
DissipationState compute_lambda(const SpectralField& u, const FilterBank& bank,
                                const DiagnosticsParams& params);

// Same scan with the hyperdissipative test
// lambda_p^{-3/2} g(lambda_p)^2 ||u_p||_inf <= c0 nu, g(r) = log^{1/4}(2+r^2).
DissipationState hyper_lambda(const SpectralField& u, const FilterBank& bank,
                              const DiagnosticsParams& params);

double hyper_g(double r);

struct SandwichResult {
    bool applicable = false; // requires 1 < lambda < inf
    bool lower_ok = false;   // f >= c0 nu lambda^2
    double upper_ratio = 0.0;
};

SandwichResult sandwich_check(const DissipationState& state, const DiagnosticsParams& params);

// kappa_d = (epsilon / nu^3)^{1/(d+1)}; nu must be positive.
double kappa_d(double epsilon, double nu, double d);

// sum_{q >= -1} lambda_q^{1+eps} ||u_q||_2^2, eps in (0,1).
double shell_energy(const std::vector<double>& shell_l2, double eps_exp);
double shell_energy(const SpectralField& u, const FilterBank& bank, double eps_exp);

// One recorded sample of a run. Scalars only: fields are not retained.
struct TrajectorySample {
    DissipationState state;
    double energy = 0.0;      // ||u||_2^2
    double grad_l2_sq = 0.0;  // ||grad u||_2^2
    double hs_norm = 0.0;     // ||u||_{H^s} at the configured s
    double du_l2_sq = 0.0;    // ||D u||_2^2 under the run's dissipation symbol
    double dissipation_integral = 0.0; // int_0^t ||grad u||_2^2, RK-stage quadrature
    double jump_bminf = std::numeric_limits<double>::quiet_NaN();
        // ||u(t_i) - u(t_{i-1})||_{B^{-1}_{inf,inf}}; NaN on the first sample
    double top_shell_energy_fraction = 0.0;
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    double nu = 0.0;
    double hs_index = 3.0;
    int grid_n = 0;
    bool truncated = false; // run ended early (blow-up / CFL collapse)

    double duration() const {
        return samples.empty() ? 0.0 : samples.back().state.t - samples.front().state.t;
    }
    bool any_unresolved() const {
        for (const auto& s : samples)
            if (!s.state.resolved) return true;
        return false;
    }
};

// Trapezoidal time integral of a per-sample quantity.
double time_integral(const TrajectoryRecord& traj, const std::vector<double>& values);

// Same, restricted to U = {t : Lambda(t) > 1}. Partial intervals enter by
// linear interpolation of the indicator (crossing at the midpoint).
double time_integral_U(const TrajectoryRecord& traj, const std::vector<double>& values);

struct TurbulenceSummary {
    double epsilon = 0.0;
    double kappa = 0.0;       // kappa_d at the measured d
    double s_exponent = 0.0;  // Bernstein saturation exponent, in [0,3]
    double d_dimension = 3.0; // 3 - s
    double mean_lambda = 0.0;     // <Lambda>
    double mean_lambda_U = 0.0;   // <Lambda>_U
    double ratio_mean = 0.0;      // (<Lambda> - 1) / kappa_d
    double ratio_mean_U = 0.0;    // <Lambda>_U / kappa_d
    bool under_resolved = false;
};

// Bisection for the smallest s in [0,3] with
// <Lambda^{2-s} ||u_Q||_inf^2>_U <= <Lambda^2 (||u_Q||_2/(2 pi)^{3/2})^2>_U,
// plus the kappa_d comparison chain. Throws when U is empty.
TurbulenceSummary intermittency_exponent(const TrajectoryRecord& traj,
                                         const DiagnosticsParams& params);

// Smallest C with (1/2) d/dt ||u||_{H^s}^2 <= C (1+f) ||u||_{H^s}^2
// (1 + log_+ ||u||_{H^s}) at every interior sample (centered differences).
double gronwall_residual(const TrajectoryRecord& traj);

// Max over consecutive sample pairs of the recorded B^{-1}_{inf,inf} jump.
// A discrete surrogate for the limsup small-jump condition.
struct JumpReport {
    double max_jump = 0.0;
    bool below_threshold = false; // max_jump < c1 nu
};
JumpReport jump_monitor(const TrajectoryRecord& traj, const DiagnosticsParams& params);

// Measured Bernstein constant: max over random solenoidal single-shell fields
// of ||u_q||_inf (2 pi)^{3/2} / (lambda_q^{3/2} ||u_q||_2). Shells are
// restricted to those fully inside the dealiased band so the measurement is
// comparable across grid sizes.
double measure_bernstein_constant(const Grid& grid, const FilterBank& bank,
                                  unsigned long seed, int fields_per_shell = 40);

} // namespace dissrange

#endif
