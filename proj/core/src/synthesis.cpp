#include "gsw/synthesis.hpp"

#include <cmath>

#include "gsw/fft.hpp"
#include "gsw/parallel.hpp"
#include "gsw/transform.hpp"
#include "spatial_kernel.hpp"

namespace gsw {

namespace {

void check_compat(const HalfSpaceField& field, const WaveletSpec& phi) {
    if (phi.dim() != field.sgrid.dim())
        throw ParameterError("synthesis: wavelet/field dimension mismatch");
    if (!phi.model.closed_form() && !(phi.spectrum.grid == field.sgrid))
        throw ParameterError("synthesis: sampled wavelet requires the field's lattice");
    const double radius = phi.model.radial_support()[1];
    const double nyq = field.sgrid.nyquist();
    for (int k = 0; k < field.agrid.count(); ++k)
        if (radius / field.agrid[k] > nyq * (1.0 + 1e-12))
            throw AliasingError(k, field.agrid[k],
                                "synthesis: scale index " + std::to_string(k) +
                                    " pushes the spectral support past Nyquist");
}

} // namespace

SampledSignal synthesis_fourier(const HalfSpaceField& field, const WaveletSpec& phi) {
    check_compat(field, phi);
    const SignalGrid& g = field.sgrid;
    const int n = g.n();
    const int K = field.agrid.count();
    const std::vector<double> w = field.agrid.quadrature_weights();

    HalfSpaceField F1 = partial_fourier(field, true);

    // per-scale products in parallel, then a fixed-order reduction over k so
    // results do not depend on the thread count
    parallel_for(static_cast<std::size_t>(K), [&](std::size_t k) {
        const double a = field.agrid[static_cast<int>(k)];
        cplx* slab = F1.slab(static_cast<int>(k));
        if (g.dim() == 1) {
            for (int p = 0; p < n; ++p)
                slab[p] *= w[k] * phi.eval_hat({a * g.freq(p), 0.0});
        } else {
            for (int p0 = 0; p0 < n; ++p0)
                for (int p1 = 0; p1 < n; ++p1)
                    slab[static_cast<std::size_t>(p0) * n + p1] *=
                        w[k] * phi.eval_hat({a * g.freq(p0), a * g.freq(p1)});
        }
    });

    SampledSpectrum acc = SampledSpectrum::zeros(g);
    for (int k = 0; k < K; ++k) {
        const cplx* slab = F1.slab(k);
        for (std::size_t i = 0; i < g.size(); ++i) acc.values[i] += slab[i];
    }
    return inverse_fft(acc);
}

std::vector<cplx> synthesis_direct(const HalfSpaceField& field, const WaveletSpec& phi,
                                   const std::vector<std::array<double, 2>>& points) {
    check_compat(field, phi);
    if (points.empty()) return {};
    const SignalGrid& g = field.sgrid;
    const int n = g.n();
    const int K = field.agrid.count();
    const std::vector<double> w = field.agrid.quadrature_weights();

    double y_extent = 0.0;
    for (const auto& x : points) {
        const double reach =
            g.half_extent() + std::max(std::abs(x[0]), std::abs(x[1]));
        y_extent = std::max(y_extent, reach / field.agrid.a_min() * 1.01);
    }
    detail::SpatialKernel kernel(phi, {0, 0}, y_extent);

    double dv = g.spacing();
    if (g.dim() == 2) dv *= dv;

    std::vector<cplx> out(points.size(), cplx(0.0));
    parallel_for(points.size(), [&](std::size_t i) {
        const auto& x = points[i];
        cplx total(0.0);
        for (int k = 0; k < K; ++k) {
            const double a = field.agrid[k];
            const double period = 2.0 * g.half_extent() / a;
            const cplx* slab = field.slab(k);
            cplx acc(0.0);
            if (g.dim() == 1) {
                for (int j = 0; j < n; ++j) {
                    const double y = (x[0] - g.coord(j)) / a;
                    acc += slab[j] * kernel.periodized({y, 0.0}, period);
                }
            } else {
                for (int j0 = 0; j0 < n; ++j0) {
                    const double y0 = (x[0] - g.coord(j0)) / a;
                    for (int j1 = 0; j1 < n; ++j1) {
                        const double y1 = (x[1] - g.coord(j1)) / a;
                        acc += slab[static_cast<std::size_t>(j0) * n + j1] *
                               kernel.periodized({y0, y1}, period);
                    }
                }
            }
            total += acc * (w[k] * dv / std::pow(a, g.dim()));
        }
        out[i] = total;
    });
    return out;
}

} // namespace gsw
