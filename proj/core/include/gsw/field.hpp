#pragma once

#include <complex>
#include <vector>

#include "gsw/grid.hpp"

namespace gsw {

namespace detail {
inline void check_finite(const std::vector<cplx>& v, const char* what) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ParameterError(std::string(what) + ": non-finite sample");
}
} // namespace detail

/// Complex samples on a SignalGrid, row-major (axis 0 slowest in 2D).
struct SampledSignal {
    SignalGrid grid;
    std::vector<cplx> values;

    SampledSignal(const SignalGrid& g, std::vector<cplx> v)
        : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw ParameterError("SampledSignal: value count does not match grid");
        detail::check_finite(values, "SampledSignal");
    }

    static SampledSignal zeros(const SignalGrid& g) {
        return SampledSignal(g, std::vector<cplx>(g.size(), cplx(0.0, 0.0)));
    }

    std::size_t index(int j0, int j1 = 0) const {
        return grid.dim() == 1 ? static_cast<std::size_t>(j0)
                               : static_cast<std::size_t>(j0) * grid.n() + j1;
    }
};

/// Complex samples on the frequency lattice of a SignalGrid, in increasing-xi
/// order per axis (index p maps to xi = (p - N/2) * pi/L), row-major in 2D.
struct SampledSpectrum {
    SignalGrid grid;
    std::vector<cplx> values;

    SampledSpectrum(const SignalGrid& g, std::vector<cplx> v)
        : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw ParameterError("SampledSpectrum: value count does not match grid");
        detail::check_finite(values, "SampledSpectrum");
    }

    static SampledSpectrum zeros(const SignalGrid& g) {
        return SampledSpectrum(g, std::vector<cplx>(g.size(), cplx(0.0, 0.0)));
    }

    std::size_t index(int p0, int p1 = 0) const {
        return grid.dim() == 1 ? static_cast<std::size_t>(p0)
                               : static_cast<std::size_t>(p0) * grid.n() + p1;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : values) m = std::max(m, std::abs(z));
        return m;
    }
};

/// Samples Phi(b_j, a_k) on position x scale lattice, scale-major: slab k is a
/// contiguous row-major signal grid.
struct HalfSpaceField {
    SignalGrid sgrid;
    ScaleGrid agrid;
    std::vector<cplx> values;

    HalfSpaceField(const SignalGrid& sg, const ScaleGrid& ag, std::vector<cplx> v)
        : sgrid(sg), agrid(ag), values(std::move(v)) {
        if (values.size() != sg.size() * static_cast<std::size_t>(ag.count()))
            throw ParameterError("HalfSpaceField: value count does not match grids");
        detail::check_finite(values, "HalfSpaceField");
    }

    static HalfSpaceField zeros(const SignalGrid& sg, const ScaleGrid& ag) {
        return HalfSpaceField(
            sg, ag, std::vector<cplx>(sg.size() * ag.count(), cplx(0.0, 0.0)));
    }

    cplx* slab(int k) { return values.data() + sgrid.size() * k; }
    const cplx* slab(int k) const { return values.data() + sgrid.size() * k; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : values) m = std::max(m, std::abs(z));
        return m;
    }
};

} // namespace gsw
