#ifndef DISSRANGE_GRID_HPP
#define DISSRANGE_GRID_HPP

#include <cmath>
#include <stdexcept>

namespace dissrange {

// Domain period is fixed at 2*pi so integer wavenumbers are the dual lattice.
inline constexpr double kDomainLength = 6.283185307179586476925286766559;

// Uniform periodic N^3 grid. N must be a power of two, N >= 16.
// Dealiasing follows the two-thirds rule: modes with |k|_inf > floor(N/3)
// are discarded after every nonlinear product.
struct Grid {
    int n = 0;
    int dealias_cutoff = 0;

    static Grid make(int n) {
        if (n < 16 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid: N must be a power of two, N >= 16");
        Grid g;
        g.n = n;
        g.dealias_cutoff = n / 3;
        return g;
    }

    long size() const { return static_cast<long>(n) * n * n; }

    // Integer wavenumber of storage index i (FFT frequency order:
    // 0, 1, ..., N/2-1, -N/2, ..., -1).
    int wavenumber(int i) const { return i < n / 2 ? i : i - n; }

    // Storage index of integer wavenumber k in [-N/2, N/2).
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    long flat(int i, int j, int l) const {
        return (static_cast<long>(i) * n + j) * n + l;
    }

    bool operator==(const Grid& o) const { return n == o.n; }
};

} // namespace dissrange

#endif
