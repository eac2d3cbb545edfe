#ifndef DISSRANGE_SPECTRAL_HPP
#define DISSRANGE_SPECTRAL_HPP

#include "dissrange/field.hpp"

namespace dissrange {

// Forward/inverse transforms. Plans are cached per grid size; execution is
// single-threaded and deterministic for a fixed build.
SpectralField forward_transform(const PhysicalField& f);
PhysicalField inverse_transform(const SpectralField& u);

// Transform of a single component into a caller-provided buffer (avoids the
// PhysicalField allocation in shell-norm hot loops).
void inverse_transform_component(const SpectralField& u, int c, std::vector<double>& out);

// Zero every mode with |k|_inf above the two-thirds cutoff.
void dealias(SpectralField& u);

// u(k) <- u(k) - k (k.u(k)) / |k|^2 for k != 0. Idempotent, self-adjoint,
// eliminates the pressure gradient in the momentum equation.
SpectralField leray_project(const SpectralField& u);

// omega(k) = i k x u(k).
SpectralField vorticity(const SpectralField& u);

// ||grad u||_2^2 = (2 pi)^3 sum_k |k|^2 |u(k)|^2.
double gradient_l2_sq(const SpectralField& u);

// ||u||_2^2 by Parseval: (2 pi)^3 sum_k |u(k)|^2.
double l2_sq(const SpectralField& u);

// max_k |k . u(k)| / (|u(k)| |k|), the worst relative divergence residual.
double divergence_residual(const SpectralField& u);

// Enforce conjugate symmetry u(-k) = conj(u(k)) by averaging mirror pairs.
void hermitian_symmetrize(SpectralField& u);

// Largest |u(-k) - conj(u(k))| over the lattice.
double hermitian_residual(const SpectralField& u);

} // namespace dissrange

#endif
