#include "dissrange/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "dissrange/spectral.hpp"

namespace dissrange {

double lp_norm(const PhysicalField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    const Grid& g = f.grid;
    if (p == kInfExponent) {
        double worst = 0.0;
        for (long idx = 0; idx < g.size(); ++idx) {
            const double m = f.comp[0][idx] * f.comp[0][idx] +
                             f.comp[1][idx] * f.comp[1][idx] +
                             f.comp[2][idx] * f.comp[2][idx];
            if (m > worst) worst = m;
        }
        return std::sqrt(worst);
    }
    const double h = kDomainLength / g.n;
    const double cell = h * h * h;
    double sum = 0.0;
    for (long idx = 0; idx < g.size(); ++idx) {
        const double m = std::sqrt(f.comp[0][idx] * f.comp[0][idx] +
                                   f.comp[1][idx] * f.comp[1][idx] +
                                   f.comp[2][idx] * f.comp[2][idx]);
        sum += std::pow(m, p) * cell;
    }
    return std::pow(sum, 1.0 / p);
}

double linf_norm(const SpectralField& u) { return lp_norm(inverse_transform(u), kInfExponent); }

double l2_norm(const SpectralField& u) { return std::sqrt(l2_sq(u)); }

double besov_from_shells(const std::vector<double>& shell_norms, double s) {
    double sup = 0.0;
    for (size_t i = 0; i < shell_norms.size(); ++i) {
        const int q = static_cast<int>(i) - 1;
        const double v = std::pow(FilterBank::lambda(q), s) * shell_norms[i];
        if (v > sup) sup = v;
    }
    return sup;
}

double besov_norm(const SpectralField& u, const FilterBank& bank, double s, double p) {
    std::vector<double> shells;
    if (p == kInfExponent)
        shells = bank.shell_linf(u);
    else if (p == 2.0)
        shells = bank.shell_l2(u);
    else
        throw std::invalid_argument("besov_norm: only p = 2 and p = inf supported");
    return besov_from_shells(shells, s);
}

double sobolev_norm(const SpectralField& u, double s) {
    const Grid& g = u.grid;
    const double vol = kDomainLength * kDomainLength * kDomainLength;
    double sum = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double w = std::pow(1.0 + k1 * k1 + k2 * k2 + k3 * k3, s);
                const long idx = g.flat(i, j, l);
                for (int c = 0; c < 3; ++c) sum += w * std::norm(u.comp[c][idx]);
            }
        }
    }
    return std::sqrt(vol * sum);
}

double sobolev_dyadic(const SpectralField& u, const FilterBank& bank, double s) {
    const auto shells = bank.shell_l2(u);
    double sum = 0.0;
    for (size_t i = 0; i < shells.size(); ++i) {
        const int q = static_cast<int>(i) - 1;
        const double lam = FilterBank::lambda(q);
        sum += std::pow(lam, 2.0 * s) * shells[i] * shells[i];
    }
    return std::sqrt(sum);
}

double log_sobolev_ratio(const SpectralField& u, const FilterBank& bank, double s) {
    const double linf = linf_norm(u);
    if (linf == 0.0) throw std::invalid_argument("log_sobolev_ratio: zero field");
    const double besov0 = besov_norm(u, bank, 0.0, kInfExponent);
    const double hs = sobolev_norm(u, s);
    const double logp = std::max(std::log(hs), 0.0);
    return linf / (besov0 * (1.0 + logp));
}

NormReport norm_report(const SpectralField& u, const FilterBank& bank) {
    NormReport r;
    r.l2 = l2_norm(u);
    r.linf = linf_norm(u);
    r.per_shell_l2 = bank.shell_l2(u);
    r.per_shell_linf = bank.shell_linf(u);
    return r;
}

} // namespace dissrange
