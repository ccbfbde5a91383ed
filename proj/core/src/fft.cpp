#include "gsw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gsw {

namespace {

// FFTW planner is not thread-safe; executing distinct plans is.  Plans are
// cached per (dim, N, sign) and executed on caller buffers via the new-array
// interface, so they are created with FFTW_UNALIGNED.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_tuple(dim, n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t total = dim == 1 ? static_cast<std::size_t>(n)
                                     : static_cast<std::size_t>(n) * n;
        std::vector<cplx> scratch_in(total), scratch_out(total);
        auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
        auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
        fftw_plan p = dim == 1
            ? fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
            : fftw_plan_dft_2d(n, n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw NumericalError("fft: planner failure");
        plans_.emplace(key, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute_dft(fftw_plan p, const cplx* in, cplx* out) {
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

// Natural-order index p (xi = (p - N/2) dxi) <-> DFT bin k = (p - N/2) mod N.
// With x_j = -L + j dx the continuous-transform phase is exactly (-1)^m,
// m = p - N/2, identical on both axes; N even makes the parity well defined
// under the mod-N wrap.
inline int dft_bin(int p, int n) {
    int m = p - n / 2;
    return m >= 0 ? m : m + n;
}
inline double parity(int p, int n) { return ((p - n / 2) & 1) ? -1.0 : 1.0; }

} // namespace

void forward_fft_slab(const SignalGrid& g, cplx* values) {
    const int n = g.n();
    const double dx = g.spacing();
    std::vector<cplx> buf(g.size());
    fftw_plan p = PlanCache::instance().get(g.dim(), n, FFTW_FORWARD);
    execute_dft(p, values, buf.data());
    if (g.dim() == 1) {
        for (int q = 0; q < n; ++q)
            values[q] = buf[dft_bin(q, n)] * (dx * parity(q, n));
    } else {
        const double dx2 = dx * dx;
        for (int q0 = 0; q0 < n; ++q0)
            for (int q1 = 0; q1 < n; ++q1)
                values[static_cast<std::size_t>(q0) * n + q1] =
                    buf[static_cast<std::size_t>(dft_bin(q0, n)) * n + dft_bin(q1, n)] *
                    (dx2 * parity(q0, n) * parity(q1, n));
    }
}

void inverse_fft_slab(const SignalGrid& g, cplx* values) {
    const int n = g.n();
    const double dx = g.spacing();
    std::vector<cplx> buf(g.size());
    if (g.dim() == 1) {
        const double scale = 1.0 / (n * dx);
        for (int q = 0; q < n; ++q)
            buf[dft_bin(q, n)] = values[q] * (parity(q, n) * scale);
    } else {
        const double scale = 1.0 / (static_cast<double>(n) * n * dx * dx);
        for (int q0 = 0; q0 < n; ++q0)
            for (int q1 = 0; q1 < n; ++q1)
                buf[static_cast<std::size_t>(dft_bin(q0, n)) * n + dft_bin(q1, n)] =
                    values[static_cast<std::size_t>(q0) * n + q1] *
                    (parity(q0, n) * parity(q1, n) * scale);
    }
    fftw_plan p = PlanCache::instance().get(g.dim(), n, FFTW_BACKWARD);
    execute_dft(p, buf.data(), values);
}

SampledSpectrum forward_fft(const SampledSignal& sig) {
    std::vector<cplx> v = sig.values;
    forward_fft_slab(sig.grid, v.data());
    return SampledSpectrum(sig.grid, std::move(v));
}

SampledSignal inverse_fft(const SampledSpectrum& spec) {
    std::vector<cplx> v = spec.values;
    inverse_fft_slab(spec.grid, v.data());
    return SampledSignal(spec.grid, std::move(v));
}

double l2_norm_sq_space(const SampledSignal& sig) {
    double s = 0.0;
    for (const auto& z : sig.values) s += std::norm(z);
    double dv = sig.grid.spacing();
    if (sig.grid.dim() == 2) dv *= dv;
    return s * dv;
}

double l2_norm_sq_freq(const SampledSpectrum& spec) {
    double s = 0.0;
    for (const auto& z : spec.values) s += std::norm(z);
    double dv = spec.grid.freq_spacing();
    if (spec.grid.dim() == 2) dv *= dv;
    const double tau = 2.0 * M_PI;
    return s * dv / (spec.grid.dim() == 1 ? tau : tau * tau);
}

} // namespace gsw
