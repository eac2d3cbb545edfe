#include "dissrange/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>

namespace dissrange {

namespace {

// Cached FFTW plans per grid size. Plans act on an internal aligned buffer;
// data is copied in and out, which is cheap next to the transform itself.
// Real-to-complex transforms on the half-spectrum; the full-lattice complex
// representation of SpectralField is filled in by conjugate mirroring. Fields
// carry conjugate symmetry throughout (they are transforms of real data), so
// the half-spectrum path is exact.
class FftCache {
  public:
    static FftCache& get(int n) {
        static std::map<int, std::unique_ptr<FftCache>> cache;
        auto& slot = cache[n];
        if (!slot) slot.reset(new FftCache(n));
        return *slot;
    }

    void forward(const double* in, Complex* out) {
        const int n = n_;
        const long m = size_;
        for (long i = 0; i < m; ++i) rbuf_[i] = in[i];
        fftw_execute(fwd_);
        const double scale = 1.0 / static_cast<double>(m);
        const int h = n / 2 + 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Complex* src =
                    reinterpret_cast<const Complex*>(hbuf_) + (static_cast<long>(i) * n + j) * h;
                Complex* row = out + (static_cast<long>(i) * n + j) * n;
                for (int l = 0; l < h; ++l) row[l] = src[l] * scale;
            }
        // mirror the missing half: u(-k) = conj(u(k))
        for (int i = 0; i < n; ++i) {
            const int mi = i == 0 ? 0 : n - i;
            for (int j = 0; j < n; ++j) {
                const int mj = j == 0 ? 0 : n - j;
                Complex* row = out + (static_cast<long>(i) * n + j) * n;
                const Complex* mrow = out + (static_cast<long>(mi) * n + mj) * n;
                for (int l = h; l < n; ++l) row[l] = std::conj(mrow[n - l]);
            }
        }
    }

    void inverse(const Complex* in, double* out) {
        const int n = n_;
        const int h = n / 2 + 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Complex* row = in + (static_cast<long>(i) * n + j) * n;
                Complex* dst =
                    reinterpret_cast<Complex*>(hbuf_) + (static_cast<long>(i) * n + j) * h;
                for (int l = 0; l < h; ++l) dst[l] = row[l];
            }
        fftw_execute(bwd_);
        for (long i = 0; i < size_; ++i) out[i] = rbuf_[i];
    }

    ~FftCache() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(rbuf_);
        fftw_free(hbuf_);
    }

  private:
    explicit FftCache(int n) : n_(n), size_(static_cast<long>(n) * n * n) {
        const long half = static_cast<long>(n) * n * (n / 2 + 1);
        rbuf_ = fftw_alloc_real(size_);
        hbuf_ = fftw_alloc_complex(half);
        fwd_ = fftw_plan_dft_r2c_3d(n, n, n, rbuf_, hbuf_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_3d(n, n, n, hbuf_, rbuf_, FFTW_ESTIMATE);
    }

    int n_;
    long size_;
    double* rbuf_;
    fftw_complex* hbuf_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

} // namespace

SpectralField forward_transform(const PhysicalField& f) {
    if (!f.finite()) throw BlowUpError("forward_transform: non-finite input field");
    SpectralField u(f.grid);
    auto& fft = FftCache::get(f.grid.n);
    for (int c = 0; c < 3; ++c) fft.forward(f.comp[c].data(), u.comp[c].data());
    return u;
}

PhysicalField inverse_transform(const SpectralField& u) {
    PhysicalField f(u.grid);
    auto& fft = FftCache::get(u.grid.n);
    for (int c = 0; c < 3; ++c) fft.inverse(u.comp[c].data(), f.comp[c].data());
    return f;
}

void inverse_transform_component(const SpectralField& u, int c, std::vector<double>& out) {
    out.resize(u.grid.size());
    FftCache::get(u.grid.n).inverse(u.comp[c].data(), out.data());
}

void dealias(SpectralField& u) {
    const Grid& g = u.grid;
    const int kc = g.dealias_cutoff;
    for (int i = 0; i < g.n; ++i) {
        const int k1 = std::abs(g.wavenumber(i));
        for (int j = 0; j < g.n; ++j) {
            const int k2 = std::abs(g.wavenumber(j));
            for (int l = 0; l < g.n; ++l) {
                const int k3 = std::abs(g.wavenumber(l));
                if (k1 > kc || k2 > kc || k3 > kc)
                    for (int c = 0; c < 3; ++c) u.at(c, i, j, l) = Complex{0.0, 0.0};
            }
        }
    }
}

SpectralField leray_project(const SpectralField& u) {
    SpectralField out = u;
    const Grid& g = u.grid;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double ksq = k1 * k1 + k2 * k2 + k3 * k3;
                if (ksq == 0.0) continue;
                const long idx = g.flat(i, j, l);
                const Complex dot =
                    k1 * out.comp[0][idx] + k2 * out.comp[1][idx] + k3 * out.comp[2][idx];
                const Complex s = dot / ksq;
                out.comp[0][idx] -= k1 * s;
                out.comp[1][idx] -= k2 * s;
                out.comp[2][idx] -= k3 * s;
            }
        }
    }
    out.divergence_free = true;
    return out;
}

SpectralField vorticity(const SpectralField& u) {
    SpectralField w(u.grid);
    const Grid& g = u.grid;
    const Complex I{0.0, 1.0};
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const long idx = g.flat(i, j, l);
                const Complex u1 = u.comp[0][idx], u2 = u.comp[1][idx], u3 = u.comp[2][idx];
                w.comp[0][idx] = I * (k2 * u3 - k3 * u2);
                w.comp[1][idx] = I * (k3 * u1 - k1 * u3);
                w.comp[2][idx] = I * (k1 * u2 - k2 * u1);
            }
        }
    }
    w.divergence_free = true;
    return w;
}

double gradient_l2_sq(const SpectralField& u) {
    const Grid& g = u.grid;
    const double vol = kDomainLength * kDomainLength * kDomainLength;
    double sum = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double ksq = k1 * k1 + k2 * k2 + k3 * k3;
                const long idx = g.flat(i, j, l);
                for (int c = 0; c < 3; ++c) sum += ksq * std::norm(u.comp[c][idx]);
            }
        }
    }
    return vol * sum;
}

double l2_sq(const SpectralField& u) {
    const double vol = kDomainLength * kDomainLength * kDomainLength;
    double sum = 0.0;
    for (int c = 0; c < 3; ++c)
        for (const Complex& z : u.comp[c]) sum += std::norm(z);
    return vol * sum;
}

double divergence_residual(const SpectralField& u) {
    const Grid& g = u.grid;
    double worst = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.wavenumber(j);
            for (int l = 0; l < g.n; ++l) {
                const double k3 = g.wavenumber(l);
                const double kmag = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
                if (kmag == 0.0) continue;
                const long idx = g.flat(i, j, l);
                const Complex dot =
                    k1 * u.comp[0][idx] + k2 * u.comp[1][idx] + k3 * u.comp[2][idx];
                const double umag = std::sqrt(std::norm(u.comp[0][idx]) +
                                              std::norm(u.comp[1][idx]) +
                                              std::norm(u.comp[2][idx]));
                if (umag == 0.0) continue;
                worst = std::max(worst, std::abs(dot) / (umag * kmag));
            }
        }
    }
    return worst;
}

void hermitian_symmetrize(SpectralField& u) {
    const Grid& g = u.grid;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < g.n; ++i) {
            const int im = (g.n - i) % g.n;
            for (int j = 0; j < g.n; ++j) {
                const int jm = (g.n - j) % g.n;
                for (int l = 0; l < g.n; ++l) {
                    const int lm = (g.n - l) % g.n;
                    const long a = g.flat(i, j, l);
                    const long b = g.flat(im, jm, lm);
                    if (b < a) continue;
                    const Complex za = u.comp[c][a];
                    const Complex zb = u.comp[c][b];
                    const Complex avg = 0.5 * (za + std::conj(zb));
                    u.comp[c][a] = avg;
                    u.comp[c][b] = std::conj(avg);
                }
            }
        }
    }
}

double hermitian_residual(const SpectralField& u) {
    const Grid& g = u.grid;
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < g.n; ++i) {
            const int im = (g.n - i) % g.n;
            for (int j = 0; j < g.n; ++j) {
                const int jm = (g.n - j) % g.n;
                for (int l = 0; l < g.n; ++l) {
                    const int lm = (g.n - l) % g.n;
                    const Complex d =
                        u.comp[c][g.flat(im, jm, lm)] - std::conj(u.comp[c][g.flat(i, j, l)]);
                    worst = std::max(worst, std::abs(d));
                }
            }
        }
    }
    return worst;
}

} // namespace dissrange
