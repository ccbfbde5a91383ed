#include "spatial_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "gsw/fft.hpp"
#include "gsw/parallel.hpp"

namespace gsw::detail {

namespace {

cplx catmull_rom(cplx m1, cplx p0, cplx p1, cplx p2, double t) {
    const double t2 = t * t, t3 = t2 * t;
    return 0.5 * ((2.0 * p0) + (p1 - m1) * t +
                  (2.0 * m1 - 5.0 * p0 + 4.0 * p1 - p2) * t2 +
                  (3.0 * p0 - m1 - 3.0 * p1 + p2) * t3);
}

} // namespace

SpatialKernel::SpatialKernel(const WaveletSpec& w, std::array<int, 2> beta,
                             double y_extent) {
    dim_ = w.dim();
    if (dim_ == 1)
        build_1d(w, beta[0], y_extent);
    else
        build_2d(w, beta, y_extent);
}

void SpatialKernel::build_1d(const WaveletSpec& w, int beta, double y_extent) {
    const double radius = std::max(w.model.radial_support()[1], 1e-6);
    dy_ = std::min(w.spectrum.grid.spacing() / 2.0, M_PI / (64.0 * radius));

    // trapezoid over [-R, R]; the integrand vanishes flat at both ends.  The
    // node count tracks the oscillation y*xi so distant table entries stay
    // accurate (>= 8 nodes per phase cycle).
    int m_nodes = 0;
    std::vector<cplx> weighted;
    double dxi = 0.0;
    auto prepare = [&](double y_max) {
        const int wanted = std::max(
            1024, 2 * static_cast<int>(std::ceil(4.0 * radius * y_max / M_PI)));
        if (wanted <= m_nodes) return;
        m_nodes = wanted;
        dxi = 2.0 * radius / m_nodes;
        weighted.assign(m_nodes + 1, cplx(0.0));
        for (int i = 0; i <= m_nodes; ++i) {
            const double xi = -radius + i * dxi;
            cplx v = w.eval_hat({xi, 0.0});
            for (int b = 0; b < beta; ++b) v *= cplx(0.0, xi);
            weighted[i] = v * (dxi / (2.0 * M_PI) * ((i == 0 || i == m_nodes) ? 0.5 : 1.0));
        }
    };
    auto eval = [&](double y) {
        // e^{i y xi} by phase recurrence; drift over ~10^4 unit-modulus
        // multiplies stays near 1e-12, inside the table's error budget
        cplx acc(0.0);
        const cplx rot = std::polar(1.0, y * dxi);
        cplx phase = std::polar(1.0, -y * radius);
        for (int i = 0; i <= m_nodes; ++i) {
            acc += weighted[i] * phase;
            phase *= rot;
        }
        return acc;
    };

    // the table must reach the kernel's 3e-11 floor so that periodization
    // truncates cleanly; subexponential tails make this extent data-driven
    const int chunk = 1024;
    const int max_nodes = 1 << 17;
    std::vector<cplx> right;   // nodes at y = (1 + index) * dy
    std::vector<cplx> left;    // nodes at y = -(1 + index) * dy
    prepare(chunk * dy_);
    const cplx center = eval(0.0);
    double peak = std::abs(center);
    const double min_extent = std::max(std::min(y_extent, 64.0), 8.0 * dy_);
    bool done = false;
    while (!done && static_cast<int>(right.size()) < max_nodes) {
        const std::size_t base = right.size();
        right.resize(base + chunk);
        left.resize(base + chunk);
        prepare((base + chunk) * dy_);
        parallel_for(static_cast<std::size_t>(chunk), [&](std::size_t i) {
            const double y = (base + i + 1) * dy_;
            right[base + i] = eval(y);
            left[base + i] = eval(-y);
        });
        double tail = 0.0;
        for (std::size_t i = base; i < right.size(); ++i) {
            peak = std::max({peak, std::abs(right[i]), std::abs(left[i])});
            tail = std::max({tail, std::abs(right[i]), std::abs(left[i])});
        }
        done = (base + chunk) * dy_ >= min_extent && tail <= 3e-11 * peak;
    }

    const int half = static_cast<int>(right.size());
    n_ = 2 * half + 1;
    y0_ = -dy_ * half;
    table_.assign(n_, cplx(0.0));
    for (int i = 0; i < half; ++i) {
        table_[half - 1 - i] = left[i];
        table_[half + 1 + i] = right[i];
    }
    table_[half] = center;
}

void SpatialKernel::build_2d(const WaveletSpec& w, std::array<int, 2> beta,
                             double y_extent) {
    // padded refined lattice large enough that wrap-around tails are small
    const double lp = std::max(2.0 * w.spectrum.grid.half_extent(),
                               std::min(y_extent * 1.25, 256.0));
    int np = 256;
    while (np < 4096 && 2.0 * lp / np > w.spectrum.grid.spacing() / 2.0) np *= 2;
    SignalGrid padded(2, np, lp);

    SampledSpectrum spec = SampledSpectrum::zeros(padded);
    parallel_for(static_cast<std::size_t>(np), [&](std::size_t p0) {
        const double xi0 = padded.freq(static_cast<int>(p0));
        cplx w0(1.0);
        for (int b = 0; b < beta[0]; ++b) w0 *= cplx(0.0, xi0);
        for (int p1 = 0; p1 < np; ++p1) {
            const double xi1 = padded.freq(p1);
            cplx v = w.eval_hat({xi0, xi1}) * w0;
            for (int b = 0; b < beta[1]; ++b) v *= cplx(0.0, xi1);
            spec.values[p0 * np + p1] = v;
        }
    });
    SampledSignal psi = inverse_fft(spec);

    dim_ = 2;
    n_ = np;
    dy_ = padded.spacing();
    y0_ = -lp;
    table_ = std::move(psi.values);
}

cplx SpatialKernel::node(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) return cplx(0.0);
    return dim_ == 1 ? table_[i] : table_[static_cast<std::size_t>(i) * n_ + j];
}

cplx SpatialKernel::interp_1d(double y) const {
    const double u = (y - y0_) / dy_;
    if (u < 1.0 || u > n_ - 2.0) return cplx(0.0);
    const int i = static_cast<int>(u);
    const double t = u - i;
    return catmull_rom(node(i - 1, 0), node(i, 0), node(i + 1, 0), node(i + 2, 0), t);
}

cplx SpatialKernel::interp_2d(std::array<double, 2> y) const {
    const double u0 = (y[0] - y0_) / dy_;
    const double u1 = (y[1] - y0_) / dy_;
    if (u0 < 1.0 || u0 > n_ - 2.0 || u1 < 1.0 || u1 > n_ - 2.0) return cplx(0.0);
    const int i0 = static_cast<int>(u0);
    const int i1 = static_cast<int>(u1);
    const double t0 = u0 - i0, t1 = u1 - i1;
    cplx rows[4];
    for (int r = 0; r < 4; ++r) {
        const int i = i0 - 1 + r;
        rows[r] = catmull_rom(node(i, i1 - 1), node(i, i1), node(i, i1 + 1),
                              node(i, i1 + 2), t1);
    }
    return catmull_rom(rows[0], rows[1], rows[2], rows[3], t0);
}

cplx SpatialKernel::operator()(std::array<double, 2> y) const {
    return dim_ == 1 ? interp_1d(y[0]) : interp_2d(y);
}

cplx SpatialKernel::periodized(std::array<double, 2> y, double period) const {
    const double extent = -y0_;   // table covers [-extent, extent]
    auto image_range = [&](double yc, int& m_lo, int& m_hi) {
        m_lo = static_cast<int>(std::ceil((-extent - yc) / period));
        m_hi = static_cast<int>(std::floor((extent - yc) / period));
    };
    if (dim_ == 1) {
        int m_lo, m_hi;
        image_range(y[0], m_lo, m_hi);
        cplx acc(0.0);
        for (int m = m_lo; m <= m_hi; ++m) acc += interp_1d(y[0] + m * period);
        return acc;
    }
    int a_lo, a_hi, b_lo, b_hi;
    image_range(y[0], a_lo, a_hi);
    image_range(y[1], b_lo, b_hi);
    cplx acc(0.0);
    for (int ma = a_lo; ma <= a_hi; ++ma)
        for (int mb = b_lo; mb <= b_hi; ++mb)
            acc += interp_2d({y[0] + ma * period, y[1] + mb * period});
    return acc;
}

} // namespace gsw::detail
