#include "gsw/signals.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "gsw/bump.hpp"
#include "gsw/fft.hpp"

namespace gsw {

namespace {

// spectrum(|xi|) -> real even signal
SampledSignal from_radial_spectrum(const SignalGrid& grid,
                                   const std::function<double(double)>& shat) {
    SampledSpectrum spec = SampledSpectrum::zeros(grid);
    const int n = grid.n();
    if (grid.dim() == 1) {
        for (int p = 0; p < n; ++p) spec.values[p] = shat(std::abs(grid.freq(p)));
    } else {
        for (int p0 = 0; p0 < n; ++p0)
            for (int p1 = 0; p1 < n; ++p1)
                spec.values[static_cast<std::size_t>(p0) * n + p1] =
                    shat(std::hypot(grid.freq(p0), grid.freq(p1)));
    }
    SampledSignal f = inverse_fft(spec);
    for (auto& z : f.values) z = cplx(z.real(), 0.0);
    return f;
}

double uniform01(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

} // namespace

SampledSignal make_bump_spectrum_signal(const SignalGrid& grid, double r0, double r1,
                                        double order) {
    GevreyBump bump(order, r0, r1);
    return from_radial_spectrum(grid, [&](double r) { return bump(r); });
}

SampledSignal make_gaussian_signal(const SignalGrid& grid, double sigma) {
    SampledSignal f = SampledSignal::zeros(grid);
    const int n = grid.n();
    const double s2 = 2.0 * sigma * sigma;
    if (grid.dim() == 1) {
        for (int j = 0; j < n; ++j) {
            const double x = grid.coord(j);
            f.values[j] = std::exp(-x * x / s2);
        }
    } else {
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 < n; ++j1) {
                const double x0 = grid.coord(j0), x1 = grid.coord(j1);
                f.values[static_cast<std::size_t>(j0) * n + j1] =
                    std::exp(-(x0 * x0 + x1 * x1) / s2);
            }
    }
    return f;
}

SampledSignal make_flat_gauss_signal(const SignalGrid& grid, double flat) {
    return from_radial_spectrum(grid, [&](double r) {
        return r == 0.0 ? 0.0 : std::exp(-r * r - flat / r);
    });
}

SampledSignal translate_signal(const SampledSignal& f, int nodes0, int nodes1) {
    const SignalGrid& g = f.grid;
    const int n = g.n();
    SampledSignal out = SampledSignal::zeros(g);
    auto wrap = [n](int j) { return ((j % n) + n) % n; };
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j) out.values[j] = f.values[wrap(j - nodes0)];
    } else {
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 < n; ++j1)
                out.values[static_cast<std::size_t>(j0) * n + j1] =
                    f.values[static_cast<std::size_t>(wrap(j0 - nodes0)) * n +
                             wrap(j1 - nodes1)];
    }
    return out;
}

HalfSpaceField make_separable_field(const SignalGrid& sgrid, const ScaleGrid& agrid,
                                    BProfile b_kind, AProfile a_kind) {
    const int n = sgrid.n();
    std::vector<double> gb(sgrid.size());
    auto bprof = [&](double r2, double b0, double b1) {
        switch (b_kind) {
            case BProfile::Gaussian: return std::exp(-r2);
            case BProfile::Sech:
                return sgrid.dim() == 1 ? 1.0 / std::cosh(b0)
                                        : 1.0 / (std::cosh(b0) * std::cosh(b1));
            default: {
                const double q = 1.0 + r2;
                return 1.0 / (q * q);
            }
        }
    };
    if (sgrid.dim() == 1) {
        for (int j = 0; j < n; ++j) {
            const double b = sgrid.coord(j);
            gb[j] = bprof(b * b, b, 0.0);
        }
    } else {
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 < n; ++j1) {
                const double b0 = sgrid.coord(j0), b1 = sgrid.coord(j1);
                gb[static_cast<std::size_t>(j0) * n + j1] =
                    bprof(b0 * b0 + b1 * b1, b0, b1);
            }
    }

    HalfSpaceField out = HalfSpaceField::zeros(sgrid, agrid);
    for (int k = 0; k < agrid.count(); ++k) {
        const double a = agrid[k];
        const double fa = a_kind == AProfile::ExpBoth ? std::exp(-a - 1.0 / a) : 1.0;
        cplx* slab = out.slab(k);
        for (std::size_t j = 0; j < sgrid.size(); ++j) slab[j] = fa * gb[j];
    }
    return out;
}

SampledSignal random_smooth_signal(const SignalGrid& grid, double band_lo,
                                   double band_hi, std::uint64_t seed,
                                   bool real_part) {
    GevreyBump env(2.0, band_lo, band_hi);
    std::mt19937_64 eng(seed);
    SampledSpectrum spec = SampledSpectrum::zeros(grid);
    const int n = grid.n();
    auto coef = [&](double r) -> cplx {
        const double u1 = 2.0 * uniform01(eng) - 1.0;
        const double u2 = 2.0 * uniform01(eng) - 1.0;
        return env(r) * cplx(u1, u2);
    };
    if (grid.dim() == 1) {
        for (int p = 0; p < n; ++p) spec.values[p] = coef(std::abs(grid.freq(p)));
    } else {
        for (int p0 = 0; p0 < n; ++p0)
            for (int p1 = 0; p1 < n; ++p1)
                spec.values[static_cast<std::size_t>(p0) * n + p1] =
                    coef(std::hypot(grid.freq(p0), grid.freq(p1)));
    }
    SampledSignal f = inverse_fft(spec);
    if (real_part)
        for (auto& z : f.values) z = cplx(z.real(), 0.0);
    return f;
}

HalfSpaceField random_smooth_field(const SignalGrid& sgrid, const ScaleGrid& agrid,
                                   double band_lo, double band_hi,
                                   std::uint64_t seed) {
    HalfSpaceField out = HalfSpaceField::zeros(sgrid, agrid);
    for (int k = 0; k < agrid.count(); ++k) {
        SampledSignal slab = random_smooth_signal(
            sgrid, band_lo, band_hi, seed + 0x9e3779b97f4a7c15ull * (k + 1), false);
        const double la = std::log(agrid[k]);
        const double envelope = std::exp(-0.5 * la * la);
        cplx* dst = out.slab(k);
        for (std::size_t j = 0; j < sgrid.size(); ++j) dst[j] = envelope * slab.values[j];
    }
    return out;
}

} // namespace gsw
