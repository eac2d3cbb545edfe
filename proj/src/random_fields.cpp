#include "dissrange/random_fields.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "dissrange/norms.hpp"
#include "dissrange/spectral.hpp"

namespace dissrange {

namespace {

SpectralField shaped_noise(const Grid& grid, unsigned long seed,
                           const std::function<double(double)>& envelope) {
    SpectralField u(grid);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < grid.n; ++i) {
        const double k1 = grid.wavenumber(i);
        for (int j = 0; j < grid.n; ++j) {
            const double k2 = grid.wavenumber(j);
            for (int l = 0; l < grid.n; ++l) {
                const double k3 = grid.wavenumber(l);
                const double kmag = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
                // draw unconditionally so the stream is independent of the envelope
                double re[3], im[3];
                for (int c = 0; c < 3; ++c) {
                    re[c] = gauss(rng);
                    im[c] = gauss(rng);
                }
                const double a = envelope(kmag);
                if (a == 0.0) continue;
                const long idx = grid.flat(i, j, l);
                for (int c = 0; c < 3; ++c)
                    u.comp[c][idx] = a * Complex{re[c], im[c]};
            }
        }
    }
    hermitian_symmetrize(u);
    dealias(u);
    return leray_project(u);
}

} // namespace

SpectralField random_band_field(const Grid& grid, unsigned long seed, double slope,
                                double kmin, double kmax, double amplitude) {
    SpectralField u = shaped_noise(grid, seed, [&](double kmag) {
        if (kmag < kmin || kmag > kmax || kmag == 0.0) return 0.0;
        return std::pow(kmag, -0.5 * slope);
    });
    const double norm = l2_norm(u);
    if (norm > 0.0) u *= amplitude / norm;
    return u;
}

SpectralField random_shell_field(const Grid& grid, const FilterBank& bank, int q,
                                 unsigned long seed, double amplitude) {
    SpectralField noise = shaped_noise(grid, seed, [](double) { return 1.0; });
    SpectralField u = bank.shell_project(noise, q);
    u = leray_project(u); // projection preserves the radial support
    const double norm = l2_norm(u);
    if (norm > 0.0) u *= amplitude / norm;
    return u;
}

} // namespace dissrange
