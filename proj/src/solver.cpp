#include "dissrange/solver.hpp"

#include <cmath>
#include <limits>

#include "dissrange/spectral.hpp"

namespace dissrange {

SpectralField nonlinear_term(const SpectralField& u) {
    const Grid& g = u.grid;

    // rotational form: u x omega = -(u.grad)u + grad(|u|^2/2); the projection
    // removes the gradient part, and the two-thirds rule keeps the quadratic
    // product alias-free, so this matches the advective form exactly.
    PhysicalField uphys = inverse_transform(u);
    PhysicalField wphys = inverse_transform(vorticity(u));

    PhysicalField adv(g);
    for (long idx = 0; idx < g.size(); ++idx) {
        const double u1 = uphys.comp[0][idx], u2 = uphys.comp[1][idx],
                     u3 = uphys.comp[2][idx];
        const double w1 = wphys.comp[0][idx], w2 = wphys.comp[1][idx],
                     w3 = wphys.comp[2][idx];
        adv.comp[0][idx] = u2 * w3 - u3 * w2;
        adv.comp[1][idx] = u3 * w1 - u1 * w3;
        adv.comp[2][idx] = u1 * w2 - u2 * w1;
    }

    if (!adv.finite()) throw BlowUpError("nonlinear_term: non-finite advection product");

    SpectralField nl = forward_transform(adv);
    dealias(nl);
    nl = leray_project(nl);
    return nl;
}

double cfl_limit(const SpectralField& u) {
    const PhysicalField f = inverse_transform(u);
    double umax_sq = 0.0;
    for (long idx = 0; idx < u.grid.size(); ++idx) {
        const double m = f.comp[0][idx] * f.comp[0][idx] +
                         f.comp[1][idx] * f.comp[1][idx] +
                         f.comp[2][idx] * f.comp[2][idx];
        if (m > umax_sq) umax_sq = m;
    }
    const double umax = std::sqrt(umax_sq);
    if (umax == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * kDomainLength / (umax * u.grid.n);
}

namespace {

// exp(-symbol(|k|) * dt) tabulated over the lattice; during a run dt takes
// only a couple of values, so the tables are reused across steps.
const std::vector<double>& decay_factors(const Grid& g, const DissipationOperator& op,
                                         double dt) {
    struct Entry {
        int n;
        DissipationKind kind;
        double nu, dt;
        std::vector<double> factor;
    };
    thread_local std::vector<Entry> cache;
    for (const auto& e : cache)
        if (e.n == g.n && e.kind == op.kind && e.nu == op.nu && e.dt == dt) return e.factor;
    if (cache.size() > 16) cache.clear();
    Entry e{g.n, op.kind, op.nu, dt, std::vector<double>(g.size())};
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double kmag = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
                e.factor[g.flat(i, j, l)] = std::exp(-op.symbol(kmag) * dt);
            }
        }
    }
    cache.push_back(std::move(e));
    return cache.back().factor;
}

void apply_decay(SpectralField& u, const DissipationOperator& op, double dt) {
    if (op.kind == DissipationKind::None || op.nu == 0.0) return;
    const std::vector<double>& f = decay_factors(u.grid, op, dt);
    for (int c = 0; c < 3; ++c)
        for (long idx = 0; idx < u.grid.size(); ++idx) u.comp[c][idx] *= f[idx];
}

void axpy(SpectralField& x, double a, const SpectralField& y) {
    for (int c = 0; c < 3; ++c)
        for (long i = 0; i < x.grid.size(); ++i) x.comp[c][i] += a * y.comp[c][i];
}

} // namespace

SpectralField step(const SpectralField& u, double dt, const DissipationOperator& op,
                   double* grad_accum) {
    if (dt <= 0.0) throw std::invalid_argument("step: dt must be > 0");
    const double limit = cfl_limit(u);
    if (dt > limit) throw CflError("step: CFL violation", limit);

    const double h = dt;
    SpectralField k1 = nonlinear_term(u);
    SpectralField ua = u;
    axpy(ua, 0.5 * h, k1);
    apply_decay(ua, op, 0.5 * h);
    SpectralField k2 = nonlinear_term(ua);
    SpectralField ub = u;
    apply_decay(ub, op, 0.5 * h);
    axpy(ub, 0.5 * h, k2);
    SpectralField k3 = nonlinear_term(ub);
    SpectralField uc = u;
    apply_decay(uc, op, h);
    apply_decay(k3, op, 0.5 * h);
    axpy(uc, h, k3);
    SpectralField k4 = nonlinear_term(uc);

    SpectralField out = u;
    apply_decay(out, op, h);
    apply_decay(k1, op, h);
    axpy(out, h / 6.0, k1);
    apply_decay(k2, op, 0.5 * h);
    axpy(out, h / 3.0, k2);
    axpy(out, h / 3.0, k3);  // already carries the half-step decay
    axpy(out, h / 6.0, k4);

    if (!out.finite()) throw BlowUpError("step: non-finite state after step");
    out.divergence_free = u.divergence_free;

    if (grad_accum) {
        // stage quadrature for d/dt int ||D u||^2, fourth order like the step
        const double g1 = du_l2_sq(u, op);
        const double g2 = du_l2_sq(ua, op);
        const double g3 = du_l2_sq(ub, op);
        const double g4 = du_l2_sq(uc, op);
        *grad_accum += h / 6.0 * (g1 + 2.0 * g2 + 2.0 * g3 + g4);
    }
    return out;
}

SpectralField taylor_green(const Grid& grid, double amplitude) {
    SpectralField u(grid);
    const Complex I{0.0, 1.0};
    for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
            for (int s3 = -1; s3 <= 1; s3 += 2) {
                u.mode(0, s1, s2, s3) = -I * (amplitude * s1 / 8.0);
                u.mode(1, s1, s2, s3) = I * (amplitude * s2 / 8.0);
            }
    u.divergence_free = true;
    return u;
}

SpectralField single_shear(const Grid& grid, double amplitude, int k) {
    if (k <= 0 || k > grid.dealias_cutoff)
        throw std::invalid_argument("single_shear: k outside the dealiased band");
    SpectralField u(grid);
    u.mode(1, k, 0, 0) = amplitude / 2.0;
    u.mode(1, -k, 0, 0) = amplitude / 2.0;
    u.divergence_free = true;
    return u;
}

double du_l2_sq(const SpectralField& u, const DissipationOperator& op) {
    if (op.kind != DissipationKind::Hyper) return gradient_l2_sq(u);
    const Grid& g = u.grid;
    const double vol = kDomainLength * kDomainLength * kDomainLength;
    double sum = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double kmag = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
                if (kmag == 0.0) continue;
                const double mv = DissipationOperator::m(kmag);
                const long idx = g.flat(i, j, l);
                for (int c = 0; c < 3; ++c) sum += mv * mv * std::norm(u.comp[c][idx]);
            }
        }
    }
    return vol * sum;
}

int hyper_crossover(const Grid& grid) {
    // m(k)^2 > k^2 iff k > log(2 + k^2)
    for (int k = 1; k <= grid.dealias_cutoff; ++k)
        if (static_cast<double>(k) > std::log(2.0 + static_cast<double>(k) * k)) return k;
    return -1;
}

} // namespace dissrange
