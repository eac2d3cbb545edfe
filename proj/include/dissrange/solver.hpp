#ifndef DISSRANGE_SOLVER_HPP
#define DISSRANGE_SOLVER_HPP

#include <string>

#include "dissrange/diagnostics.hpp"

namespace dissrange {

enum class DissipationKind { Standard, Hyper, None };

// Fourier symbol of the viscous term: nu |k|^2, nu m(|k|)^2 with
// m(r) = r^{5/4} / g(r), or zero for the Euler equations.
struct DissipationOperator {
    DissipationKind kind = DissipationKind::Standard;
    double nu = 0.0;

    static double m(double r) { return std::pow(r, 1.25) / hyper_g(r); }

    double symbol(double kmag) const {
        if (kind == DissipationKind::None || kmag == 0.0) return 0.0;
        if (kind == DissipationKind::Standard) return nu * kmag * kmag;
        const double mv = m(kmag);
        return nu * mv * mv;
    }
};

struct CflError : std::runtime_error {
    double admissible_dt;
    CflError(const std::string& msg, double dt)
        : std::runtime_error(msg), admissible_dt(dt) {}
};

// -P[(u . grad) u], dealiased. Pseudo-spectral: velocity and its gradient go
// to physical space, the product comes back and is projected.
SpectralField nonlinear_term(const SpectralField& u);

// Largest dt with u_max * dt * N / (2 pi) <= 0.5.
double cfl_limit(const SpectralField& u);

// One step of the classical fourth-order scheme applied to the
// integrating-factor variable: the dissipation symbol is integrated exactly,
// the nonlinearity explicitly. Throws CflError when dt exceeds the limit.
// If grad_accum is non-null, int ||D u||_2^2 dt is advanced over the step
// with the matching fourth-order stage quadrature.
SpectralField step(const SpectralField& u, double dt, const DissipationOperator& op,
                   double* grad_accum = nullptr);

// Canonical initial conditions.
SpectralField taylor_green(const Grid& grid, double amplitude);
SpectralField single_shear(const Grid& grid, double amplitude, int k);

// ||D u||_2^2 under the operator's symbol m (for Standard this is the
// gradient norm; for Hyper, sum m(|k|)^2 |u(k)|^2 (2 pi)^3).
double du_l2_sq(const SpectralField& u, const DissipationOperator& op);

// Crossover wavenumber above which the hyper symbol exceeds |k|^2, i.e. the
// smallest integer k >= 1 with sqrt(k) > g(k)^4... see hyper_crossover impl.
int hyper_crossover(const Grid& grid);

} // namespace dissrange

#endif
