#include "gsw/transform.hpp"

#include <cmath>

#include "gsw/fft.hpp"
#include "gsw/parallel.hpp"
#include "spatial_kernel.hpp"

namespace gsw {

namespace {

void check_beta(const SignalGrid& g, std::array<int, 2> beta) {
    if (beta[0] < 0 || beta[1] < 0)
        throw ParameterError("transform: derivative orders must be nonnegative");
    const int total = beta[0] + (g.dim() == 2 ? beta[1] : 0);
    if (total > 8)
        throw ParameterError("transform: |beta| must not exceed 8");
    if (g.dim() == 1 && beta[1] != 0)
        throw ParameterError("transform: beta[1] set on a 1D request");
}

void check_wavelet_compat(const SampledSignal& f, const WaveletSpec& w) {
    if (w.dim() != f.grid.dim())
        throw ParameterError("transform: wavelet/signal dimension mismatch");
    if (!w.model.closed_form() && !(w.spectrum.grid == f.grid))
        throw ParameterError(
            "transform: sampled wavelet requires the signal's lattice");
}

void check_aliasing(const WaveletSpec& w, const ScaleGrid& scales,
                    const SignalGrid& g) {
    const double radius = w.model.radial_support()[1];
    const double nyq = g.nyquist();
    for (int k = 0; k < scales.count(); ++k) {
        if (radius / scales[k] > nyq * (1.0 + 1e-12))
            throw AliasingError(k, scales[k],
                                "cwt: scale index " + std::to_string(k) + " (a = " +
                                    std::to_string(scales[k]) +
                                    ") pushes the spectral support past Nyquist");
    }
}

// (i xi)^beta as i^{|beta|} * xi^beta
cplx ipow(int n) {
    switch (n % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

HalfSpaceField cwt_fourier(const TransformRequest& req) {
    return cwt_fourier(req.signal, req.wavelet, req.scales, req.beta);
}

HalfSpaceField cwt_fourier(const SampledSignal& f, const WaveletSpec& w,
                           const ScaleGrid& scales, std::array<int, 2> beta) {
    const SignalGrid& g = f.grid;
    check_beta(g, beta);
    check_wavelet_compat(f, w);
    check_aliasing(w, scales, g);

    const SampledSpectrum fhat = forward_fft(f);
    const int n = g.n();
    const cplx iphase = ipow(beta[0] + beta[1]);

    HalfSpaceField out = HalfSpaceField::zeros(g, scales);
    parallel_for(static_cast<std::size_t>(scales.count()), [&](std::size_t k) {
        const double a = scales[static_cast<int>(k)];
        cplx* slab = out.slab(static_cast<int>(k));
        if (g.dim() == 1) {
            for (int p = 0; p < n; ++p) {
                const double xi = g.freq(p);
                double wt = 1.0;
                for (int b = 0; b < beta[0]; ++b) wt *= xi;
                slab[p] = fhat.values[p] * std::conj(w.eval_hat({a * xi, 0.0})) *
                          (iphase * wt);
            }
        } else {
            for (int p0 = 0; p0 < n; ++p0) {
                const double xi0 = g.freq(p0);
                double w0 = 1.0;
                for (int b = 0; b < beta[0]; ++b) w0 *= xi0;
                for (int p1 = 0; p1 < n; ++p1) {
                    const double xi1 = g.freq(p1);
                    double wt = w0;
                    for (int b = 0; b < beta[1]; ++b) wt *= xi1;
                    slab[static_cast<std::size_t>(p0) * n + p1] =
                        fhat.values[static_cast<std::size_t>(p0) * n + p1] *
                        std::conj(w.eval_hat({a * xi0, a * xi1})) * (iphase * wt);
                }
            }
        }
        inverse_fft_slab(g, slab);
    });
    return out;
}

DirectTransformResult cwt_direct(const SampledSignal& f, const WaveletSpec& w,
                                 const std::vector<ProbePoint>& points,
                                 std::array<int, 2> beta) {
    const SignalGrid& g = f.grid;
    check_beta(g, beta);
    check_wavelet_compat(f, w);
    if (g.dim() == 2 && (beta[0] != 0 || beta[1] != 0))
        throw ParameterError("cwt_direct: 2D derivative probes are not supported");

    double a_min = 1e300, y_extent = 0.0;
    for (const auto& p : points) {
        if (!(p.a > 0.0)) throw ParameterError("cwt_direct: scales must be positive");
        a_min = std::min(a_min, p.a);
        const double reach =
            g.half_extent() + std::max(std::abs(p.b[0]), std::abs(p.b[1]));
        y_extent = std::max(y_extent, reach / p.a * 1.01);
    }
    if (points.empty()) return {};

    detail::SpatialKernel kernel(w, beta, y_extent);

    const auto sup = w.model.radial_support();
    const double width = std::max(sup[1] - sup[0], 1e-9);
    const double warn_below = 4.0 * g.spacing() / width;

    const int total_beta = beta[0] + beta[1];
    const double sign = total_beta % 2 == 0 ? 1.0 : -1.0;
    const int n = g.n();
    double dv = g.spacing();
    if (g.dim() == 2) dv *= dv;

    DirectTransformResult res;
    res.values.assign(points.size(), cplx(0.0));
    res.warnings.assign(points.size(), std::string());
    parallel_for(points.size(), [&](std::size_t i) {
        const auto& pt = points[i];
        // the grid operators act on the torus, so the kernel is periodized
        // at the dilated grid period
        const double period = 2.0 * g.half_extent() / pt.a;
        cplx acc(0.0);
        if (g.dim() == 1) {
            for (int j = 0; j < n; ++j) {
                const double y = (g.coord(j) - pt.b[0]) / pt.a;
                acc += f.values[j] * std::conj(kernel.periodized({y, 0.0}, period));
            }
        } else {
            for (int j0 = 0; j0 < n; ++j0) {
                const double y0 = (g.coord(j0) - pt.b[0]) / pt.a;
                for (int j1 = 0; j1 < n; ++j1) {
                    const double y1 = (g.coord(j1) - pt.b[1]) / pt.a;
                    acc += f.values[static_cast<std::size_t>(j0) * n + j1] *
                           std::conj(kernel.periodized({y0, y1}, period));
                }
            }
        }
        const double scale_pow =
            std::pow(pt.a, g.dim() + total_beta);
        res.values[i] = acc * (sign * dv / scale_pow);
        if (pt.a < warn_below)
            res.warnings[i] = "underresolved scale: a < 4 dx / support width";
    });
    return res;
}

HalfSpaceField partial_fourier(const HalfSpaceField& field, bool forward) {
    HalfSpaceField out = field;
    parallel_for(static_cast<std::size_t>(field.agrid.count()), [&](std::size_t k) {
        cplx* slab = out.slab(static_cast<int>(k));
        if (forward)
            forward_fft_slab(out.sgrid, slab);
        else
            inverse_fft_slab(out.sgrid, slab);
    });
    return out;
}

} // namespace gsw
