#ifndef DISSRANGE_FIELD_HPP
#define DISSRANGE_FIELD_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dissrange/grid.hpp"

namespace dissrange {

// Raised when a field stops being a finite-valued object (NaN/Inf), which on
// a fixed grid is the discrete analogue of blow-up.
struct BlowUpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

// Fourier coefficients of a 3-component real periodic vector field.
// Coefficient of mode k is (1/N^3) * sum_x f(x) exp(-i k.x); storage per
// component is full N^3 complex in FFT frequency order, k1 slowest.
struct SpectralField {
    Grid grid;
    std::array<std::vector<Complex>, 3> comp;
    bool divergence_free = false;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), Complex{0.0, 0.0});
    }

    Complex& at(int c, int i, int j, int l) { return comp[c][grid.flat(i, j, l)]; }
    const Complex& at(int c, int i, int j, int l) const { return comp[c][grid.flat(i, j, l)]; }

    // Coefficient addressed by integer wavenumber vector.
    Complex& mode(int c, int k1, int k2, int k3) {
        return comp[c][grid.flat(grid.index_of(k1), grid.index_of(k2), grid.index_of(k3))];
    }
    const Complex& mode(int c, int k1, int k2, int k3) const {
        return comp[c][grid.flat(grid.index_of(k1), grid.index_of(k2), grid.index_of(k3))];
    }

    bool finite() const {
        for (const auto& c : comp)
            for (const auto& z : c)
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    SpectralField& operator+=(const SpectralField& o) {
        for (int c = 0; c < 3; ++c)
            for (long i = 0; i < grid.size(); ++i) comp[c][i] += o.comp[c][i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        for (int c = 0; c < 3; ++c)
            for (long i = 0; i < grid.size(); ++i) comp[c][i] -= o.comp[c][i];
        return *this;
    }
    SpectralField& operator*=(double a) {
        for (int c = 0; c < 3; ++c)
            for (long i = 0; i < grid.size(); ++i) comp[c][i] *= a;
        return *this;
    }
};

// Real-space samples of a 3-component vector field on the N^3 lattice.
struct PhysicalField {
    Grid grid;
    std::array<std::vector<double>, 3> comp;

    PhysicalField() = default;
    explicit PhysicalField(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }

    double& at(int c, int i, int j, int l) { return comp[c][grid.flat(i, j, l)]; }
    const double& at(int c, int i, int j, int l) const { return comp[c][grid.flat(i, j, l)]; }

    bool finite() const {
        for (const auto& c : comp)
            for (double v : c)
                if (!std::isfinite(v)) return false;
        return true;
    }
};

} // namespace dissrange

#endif
