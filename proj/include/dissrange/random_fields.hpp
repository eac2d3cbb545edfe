#ifndef DISSRANGE_RANDOM_FIELDS_HPP
#define DISSRANGE_RANDOM_FIELDS_HPP

#include "dissrange/filter_bank.hpp"

namespace dissrange {

// Random divergence-free band-limited field: Gaussian coefficients shaped by
// |k|^{-slope/2} in energy for kmin <= |k| <= kmax, Hermitian-symmetrized,
// dealiased and Leray-projected. Deterministic for a fixed seed.
SpectralField random_band_field(const Grid& grid, unsigned long seed, double slope,
                                double kmin, double kmax, double amplitude);

// Random divergence-free field supported in dyadic shell q of the bank.
SpectralField random_shell_field(const Grid& grid, const FilterBank& bank, int q,
                                 unsigned long seed, double amplitude = 1.0);

} // namespace dissrange

#endif
