#include <doctest.h>

#include <cmath>

#include "dissrange/norms.hpp"
#include "dissrange/solver.hpp"
#include "dissrange/spectral.hpp"

using namespace dissrange;

namespace {

const double kPi = std::acos(-1.0);

double inner_product(const SpectralField& a, const SpectralField& b) {
    double sum = 0.0;
    for (int c = 0; c < 3; ++c)
        for (long i = 0; i < a.grid.size(); ++i)
            sum += (a.comp[c][i] * std::conj(b.comp[c][i])).real();
    return std::pow(2.0 * kPi, 3.0) * sum;
}

// L2-relative divergence content; immune to roundoff-sized junk modes that
// dominate the per-mode relative residual.
double div_fraction(const SpectralField& u) {
    const Grid& g = u.grid;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int l = 0; l < g.n; ++l) {
                const double k1 = g.wavenumber(i), k2 = g.wavenumber(j), k3 = g.wavenumber(l);
                const double ksq = k1 * k1 + k2 * k2 + k3 * k3;
                const long idx = g.flat(i, j, l);
                double mag = 0.0;
                for (int c = 0; c < 3; ++c) mag += std::norm(u.comp[c][idx]);
                den += mag;
                if (ksq == 0.0) continue;
                const Complex d = k1 * u.comp[0][idx] + k2 * u.comp[1][idx] + k3 * u.comp[2][idx];
                num += std::norm(d) / ksq;
            }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double max_coeff(const SpectralField& u) {
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (const auto& z : u.comp[c]) worst = std::max(worst, std::abs(z));
    return worst;
}

} // namespace

TEST_CASE("vortex initial condition: energy, support, symmetry") {
    Grid g = Grid::make(32);
    const double amp = 1.3;
    SpectralField u = taylor_green(g, amp);
    const double vol = std::pow(2.0 * kPi, 3.0);
    CHECK(l2_sq(u) == doctest::Approx(amp * amp * vol / 4.0).epsilon(1e-12));
    CHECK(divergence_residual(u) <= 1e-12);
    CHECK(hermitian_residual(u) <= 1e-15);
    // support is exactly the eight (+-1, +-1, +-1) modes
    long nonzero = 0;
    for (int c = 0; c < 3; ++c)
        for (const auto& z : u.comp[c])
            if (std::abs(z) > 0.0) ++nonzero;
    CHECK(nonzero == 16);  // two active components on eight modes
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int s3 : {-1, 1}) {
                CHECK(std::abs(u.mode(0, s1, s2, s3) - Complex{0.0, -amp * s1 / 8.0}) <= 1e-15);
                CHECK(std::abs(u.mode(1, s1, s2, s3) - Complex{0.0, amp * s2 / 8.0}) <= 1e-15);
                CHECK(std::abs(u.mode(2, s1, s2, s3)) == 0.0);
            }
}

TEST_CASE("advection term vanishes on shear and constant flows") {
    Grid g = Grid::make(32);
    SpectralField shear = single_shear(g, 2.0, 4);
    CHECK(max_coeff(nonlinear_term(shear)) <= 1e-14);

    SpectralField constant(g);
    constant.mode(0, 0, 0, 0) = Complex{1.5, 0.0};
    constant.divergence_free = true;
    CHECK(max_coeff(nonlinear_term(constant)) <= 1e-14);

    CHECK_THROWS(single_shear(g, 1.0, 0));
    CHECK_THROWS(single_shear(g, 1.0, 100));
}

TEST_CASE("advection term is energy-flux neutral, solenoidal and dealiased") {
    Grid g = Grid::make(32);
    SpectralField u = taylor_green(g, 1.0);
    SpectralField nl = nonlinear_term(u);
    CHECK(max_coeff(nl) > 0.0);
    CHECK(div_fraction(nl) <= 1e-12);
    const double scale = std::sqrt(l2_sq(u)) * std::sqrt(l2_sq(nl));
    CHECK(std::abs(inner_product(u, nl)) / scale <= 1e-12);
    // nothing above the two-thirds cutoff
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int l = 0; l < g.n; ++l) {
                    const double kinf = std::max({std::abs(g.wavenumber(i)),
                                                  std::abs(g.wavenumber(j)),
                                                  std::abs(g.wavenumber(l))});
                    if (kinf > g.dealias_cutoff)
                        CHECK(std::abs(nl.at(c, i, j, l)) == 0.0);
                }
}

TEST_CASE("time step limit follows the advective restriction") {
    Grid g = Grid::make(32);
    SpectralField u = single_shear(g, 2.0, 4);
    const double expected = 0.5 * (2.0 * kPi / 32.0) / 2.0;
    CHECK(cfl_limit(u) == doctest::Approx(expected).epsilon(1e-12));
    DissipationOperator op{DissipationKind::Standard, 0.1};
    CHECK_THROWS_AS(step(u, 10.0 * expected, op), CflError);
    try {
        step(u, 10.0 * expected, op);
    } catch (const CflError& e) {
        CHECK(e.admissible_dt == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("exact diffusion of a shear mode") {
    Grid g = Grid::make(32);
    const double amp = 1.0, nu = 0.5;
    const int k = 4;
    SpectralField u = single_shear(g, amp, k);
    DissipationOperator op{DissipationKind::Standard, nu};
    const double dt = 0.02;
    const int steps = 50;
    double diss = 0.0;
    for (int i = 0; i < steps; ++i) u = step(u, dt, op, &diss);
    const double t = dt * steps;
    const double decay = std::exp(-nu * k * k * t);
    CHECK(std::abs(u.mode(1, k, 0, 0) - Complex{amp / 2.0 * decay, 0.0}) <= 1e-12);
    CHECK(std::abs(u.mode(1, -k, 0, 0) - Complex{amp / 2.0 * decay, 0.0}) <= 1e-12);
    // int_0^t ||grad u||^2 has the closed form g0 (1 - e^{-2 nu k^2 t}) / (2 nu k^2)
    const double g0 = gradient_l2_sq(single_shear(g, amp, k));
    const double exact = g0 * (1.0 - std::exp(-2.0 * nu * k * k * t)) / (2.0 * nu * k * k);
    CHECK(diss == doctest::Approx(exact).epsilon(1e-4));
    // fourth-order stage quadrature: halving dt shrinks the defect ~16x
    SpectralField u2 = single_shear(g, amp, k);
    double diss2 = 0.0;
    for (int i = 0; i < 2 * steps; ++i) u2 = step(u2, dt / 2.0, op, &diss2);
    const double ratio = std::abs(diss - exact) / std::abs(diss2 - exact);
    CHECK(ratio > 10.0);
    CHECK(ratio < 24.0);
}

TEST_CASE("ideal dynamics leave a shear equilibrium fixed") {
    Grid g = Grid::make(32);
    SpectralField u = single_shear(g, 1.0, 4);
    SpectralField v = u;
    DissipationOperator op{DissipationKind::None, 0.0};
    for (int i = 0; i < 20; ++i) v = step(v, 0.05, op);
    v -= u;
    CHECK(max_coeff(v) <= 1e-12);
}

TEST_CASE("log-corrected dissipation decays a shear mode at rate nu m(k)^2") {
    Grid g = Grid::make(32);
    const double amp = 1.0, nu = 0.05;
    const int k = 8;
    SpectralField u = single_shear(g, amp, k);
    DissipationOperator op{DissipationKind::Hyper, nu};
    const double mk = std::pow(8.0, 1.25) / std::pow(std::log(66.0), 0.25);
    CHECK(op.symbol(8.0) == doctest::Approx(nu * mk * mk).epsilon(1e-14));
    const double dt = 0.02;
    const int steps = 25;
    for (int i = 0; i < steps; ++i) u = step(u, dt, op);
    const double decay = std::exp(-nu * mk * mk * dt * steps);
    CHECK(std::abs(u.mode(1, k, 0, 0) - Complex{amp / 2.0 * decay, 0.0}) <= 1e-12);
}

TEST_CASE("a full step preserves solenoidality and conjugate symmetry") {
    Grid g = Grid::make(32);
    SpectralField u = taylor_green(g, 1.0);
    DissipationOperator op{DissipationKind::Standard, 0.01};
    for (int i = 0; i < 5; ++i) u = step(u, 0.02, op);
    CHECK(u.finite());
    CHECK(div_fraction(u) <= 1e-12);
    CHECK(hermitian_residual(u) <= 1e-12);
}

TEST_CASE("energy budget closes over a short viscous run") {
    Grid g = Grid::make(32);
    SpectralField u = taylor_green(g, 1.0);
    DissipationOperator op{DissipationKind::Standard, 0.1};
    const double e0 = l2_sq(u);
    double diss = 0.0;
    for (int i = 0; i < 25; ++i) u = step(u, 0.02, op, &diss);
    const double defect = std::abs(l2_sq(u) + 2.0 * op.nu * diss - e0) / e0;
    CHECK(defect <= 1e-8);
}

TEST_CASE("symbol crossover of the log-corrected operator") {
    Grid g = Grid::make(32);
    CHECK(hyper_crossover(g) == 2);
    DissipationOperator op{DissipationKind::Hyper, 1.0};
    CHECK(op.symbol(1.0) < 1.0);
    CHECK(op.symbol(2.0) > 4.0);
}
