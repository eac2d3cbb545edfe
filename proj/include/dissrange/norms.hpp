#ifndef DISSRANGE_NORMS_HPP
#define DISSRANGE_NORMS_HPP

#include <limits>
#include <vector>

#include "dissrange/filter_bank.hpp"

namespace dissrange {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

// L^p lattice quadrature, p in [1, inf]. Vector fields are measured by the
// pointwise Euclidean magnitude.
double lp_norm(const PhysicalField& f, double p);

double linf_norm(const SpectralField& u);
double l2_norm(const SpectralField& u);

// ||u||_{B^s_{p,inf}} = sup_{q} lambda_q^s ||u_q||_p over resolved shells,
// lambda_{-1} := 1. Only p = 2 and p = inf are needed.
double besov_norm(const SpectralField& u, const FilterBank& bank, double s, double p);

// Same sup evaluated from precomputed per-shell norms.
double besov_from_shells(const std::vector<double>& shell_norms, double s);

// Multiplier form: ( (2 pi)^3 sum_k (1+|k|^2)^s |u(k)|^2 )^{1/2}.
double sobolev_norm(const SpectralField& u, double s);

// Dyadic surrogate ( sum_q lambda_q^{2s} ||u_q||_2^2 )^{1/2}; equivalent to
// the multiplier form up to a bank-dependent constant.
double sobolev_dyadic(const SpectralField& u, const FilterBank& bank, double s);

// ||u||_inf / ( ||u||_{B^0_{inf,inf}} (1 + log_+ ||u||_{H^s}) ), s > 3/2.
// Natural log; log_+ x = max(log x, 0). Throws on the zero field.
double log_sobolev_ratio(const SpectralField& u, const FilterBank& bank, double s);

struct NormReport {
    double l2 = 0.0;
    double linf = 0.0;
    std::vector<double> per_shell_l2;
    std::vector<double> per_shell_linf;
};

NormReport norm_report(const SpectralField& u, const FilterBank& bank);

} // namespace dissrange

#endif
