#include "dissrange/filter_bank.hpp"

#include <cmath>
#include <stdexcept>

#include "dissrange/spectral.hpp"

namespace dissrange {

namespace {
double smooth_h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
} // namespace

double chi(double r) {
    const double t = 2.0 * r - 1.0;
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = smooth_h(t);
    const double b = smooth_h(1.0 - t);
    return b / (a + b);
}

double phi(int q, double kmag) {
    const double s = std::ldexp(1.0, -q); // 2^{-q}
    return chi(0.5 * s * kmag) - chi(s * kmag);
}

FilterBank::FilterBank(const Grid& grid) : grid_(grid) {
    const double corner = std::sqrt(3.0) * grid.dealias_cutoff;
    q_max_ = 0;
    while (static_cast<double>(1 << q_max_) < corner) ++q_max_;

    kmag_.resize(grid.size());
    for (int i = 0; i < grid.n; ++i) {
        const double k1 = grid.wavenumber(i);
        for (int j = 0; j < grid.n; ++j) {
            const double k2 = grid.wavenumber(j);
            for (int l = 0; l < grid.n; ++l) {
                const double k3 = grid.wavenumber(l);
                kmag_[grid.flat(i, j, l)] = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
            }
        }
    }

    weights_.assign(num_shells(), std::vector<double>(grid.size()));
    for (long idx = 0; idx < grid.size(); ++idx) weights_[0][idx] = chi(kmag_[idx]);
    for (int q = 0; q <= q_max_; ++q)
        for (long idx = 0; idx < grid.size(); ++idx)
            weights_[q + 1][idx] = phi(q, kmag_[idx]);
}

void FilterBank::check_shell(int q) const {
    if (q < -1 || q > q_max_)
        throw std::out_of_range("FilterBank: shell index out of range");
}

SpectralField FilterBank::shell_project(const SpectralField& u, int q) const {
    check_shell(q);
    SpectralField out = u;
    const auto& w = weights_[q + 1];
    for (int c = 0; c < 3; ++c)
        for (long idx = 0; idx < grid_.size(); ++idx) out.comp[c][idx] *= w[idx];
    return out;
}

SpectralField FilterBank::low_pass(const SpectralField& u, int Q) const {
    check_shell(Q);
    SpectralField out = u;
    const double s = std::ldexp(1.0, -Q - 1);
    for (long idx = 0; idx < grid_.size(); ++idx) {
        const double w = chi(s * kmag_[idx]);
        for (int c = 0; c < 3; ++c) out.comp[c][idx] *= w;
    }
    return out;
}

SpectralField FilterBank::high_pass(const SpectralField& u, int Q) const {
    check_shell(Q);
    SpectralField out = u;
    const double s = std::ldexp(1.0, -Q);
    for (long idx = 0; idx < grid_.size(); ++idx) {
        const double w = 1.0 - chi(s * kmag_[idx]);
        for (int c = 0; c < 3; ++c) out.comp[c][idx] *= w;
    }
    return out;
}

std::vector<double> FilterBank::shell_l2(const SpectralField& u) const {
    const double vol = kDomainLength * kDomainLength * kDomainLength;
    std::vector<double> out(num_shells(), 0.0);
    for (int q = -1; q <= q_max_; ++q) {
        const auto& w = weights_[q + 1];
        double sum = 0.0;
        for (int c = 0; c < 3; ++c)
            for (long idx = 0; idx < grid_.size(); ++idx)
                sum += w[idx] * w[idx] * std::norm(u.comp[c][idx]);
        out[q + 1] = std::sqrt(vol * sum);
    }
    return out;
}

std::vector<double> FilterBank::shell_linf(const SpectralField& u) const {
    std::vector<double> out(num_shells(), 0.0);
    SpectralField shell(grid_);
    std::array<std::vector<double>, 3> phys;
    for (int q = -1; q <= q_max_; ++q) {
        const auto& w = weights_[q + 1];
        for (int c = 0; c < 3; ++c) {
            for (long idx = 0; idx < grid_.size(); ++idx)
                shell.comp[c][idx] = w[idx] * u.comp[c][idx];
            inverse_transform_component(shell, c, phys[c]);
        }
        double worst = 0.0;
        for (long idx = 0; idx < grid_.size(); ++idx) {
            const double m = phys[0][idx] * phys[0][idx] + phys[1][idx] * phys[1][idx] +
                             phys[2][idx] * phys[2][idx];
            if (m > worst) worst = m;
        }
        out[q + 1] = std::sqrt(worst);
    }
    return out;
}

double FilterBank::partition_residual() const {
    const double s = std::ldexp(1.0, -q_max_ - 1);
    double worst = 0.0;
    for (long idx = 0; idx < grid_.size(); ++idx) {
        double sum = weights_[0][idx];
        for (int q = 0; q <= q_max_; ++q) sum += weights_[q + 1][idx];
        worst = std::max(worst, std::abs(sum - chi(s * kmag_[idx])));
    }
    return worst;
}

} // namespace dissrange
