#ifndef DISSRANGE_FILTER_BANK_HPP
#define DISSRANGE_FILTER_BANK_HPP

#include <vector>

#include "dissrange/field.hpp"

namespace dissrange {

// Radial bump: chi(r) = 1 for r <= 1/2, 0 for r >= 1, smooth and
// nonincreasing in between. Realized as the exponential smoothstep
// chi(r) = psi(2r - 1), psi(t) = h(1-t)/(h(t)+h(1-t)), h(t) = exp(-1/t),
// so chi(3/4) = 1/2 exactly by symmetry.
double chi(double r);

// phi_q(|k|) = chi(2^{-q-1}|k|) - chi(2^{-q}|k|), supported in
// 2^{q-1} < |k| < 2^{q+1}.
double phi(int q, double kmag);

// Dyadic shell filters tabulated on the wavenumber lattice of one grid.
// Shell index q runs over [-1, q_max]; shell -1 is the low-frequency bump
// chi itself, lambda_q = 2^q with lambda_{-1} := 1.
class FilterBank {
  public:
    explicit FilterBank(const Grid& grid);

    const Grid& grid() const { return grid_; }
    // Largest shell index: smallest q with 2^q >= sqrt(3) * dealias_cutoff,
    // so every retained mode (corner modes included) lies strictly below the
    // top of shell q_max and low_pass(q_max) is the identity.
    int q_max() const { return q_max_; }
    int num_shells() const { return q_max_ + 2; } // includes q = -1

    static double lambda(int q) { return q <= -1 ? 1.0 : static_cast<double>(1 << q); }

    // Multiplier value of shell q at lattice site idx.
    double weight(int q, long idx) const { return weights_[q + 1][idx]; }

    SpectralField shell_project(const SpectralField& u, int q) const;
    // Multiplier chi(2^{-Q-1}|k|): the telescoped sum of shells q <= Q.
    SpectralField low_pass(const SpectralField& u, int Q) const;
    // u minus low_pass at Q-1, i.e. shells q >= Q.
    SpectralField high_pass(const SpectralField& u, int Q) const;

    // ||u_q||_2 for every shell, by Parseval on the tabulated weights.
    std::vector<double> shell_l2(const SpectralField& u) const;
    // ||u_q||_inf for every shell (pointwise Euclidean magnitude), via one
    // inverse transform per shell component.
    std::vector<double> shell_linf(const SpectralField& u) const;

    // max over the lattice of |chi + sum_q phi_q - chi(2^{-q_max-1}|k|)|.
    double partition_residual() const;

  private:
    void check_shell(int q) const;

    Grid grid_;
    int q_max_ = 0;
    std::vector<double> kmag_;                  // |k| per lattice site
    std::vector<std::vector<double>> weights_;  // [q+1][idx]
};

} // namespace dissrange

#endif
