#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gsw/errors.hpp"

namespace gsw {

using cplx = std::complex<double>;

/// Uniform periodic lattice on [-L, L)^dim with N nodes per axis.
///
/// Node coordinates are x_j = -L + j*dx with dx = 2L/N.  The matching
/// frequency lattice is xi_m = pi*m/L for m in [-N/2, N/2), consistent with
/// the transform convention  f^(xi) = \int f(x) e^{-i x xi} dx.
class SignalGrid {
public:
    SignalGrid(int dim, int points_per_axis, double half_extent)
        : dim_(dim), n_(points_per_axis), l_(half_extent) {
        if (dim != 1 && dim != 2)
            throw ParameterError("SignalGrid: dim must be 1 or 2");
        if (n_ < 16 || (n_ & (n_ - 1)) != 0)
            throw ParameterError("SignalGrid: N must be a power of two and >= 16");
        if (!(l_ > 0.0))
            throw ParameterError("SignalGrid: half extent must be positive");
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double half_extent() const { return l_; }
    double spacing() const { return 2.0 * l_ / n_; }

    std::size_t size() const {
        std::size_t s = static_cast<std::size_t>(n_);
        return dim_ == 1 ? s : s * s;
    }

    double coord(int j) const { return -l_ + j * spacing(); }

    /// Frequency lattice spacing pi/L.
    double freq_spacing() const { return M_PI / l_; }
    /// Largest representable frequency magnitude, pi*N/(2L) = pi/dx.
    double nyquist() const { return M_PI * n_ / (2.0 * l_); }
    double freq(int idx) const { return (idx - n_ / 2) * freq_spacing(); }

    bool operator==(const SignalGrid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && l_ == o.l_;
    }
    bool operator!=(const SignalGrid& o) const { return !(*this == o); }

private:
    int dim_;
    int n_;
    double l_;
};

/// Frequency lattice values per axis, in increasing order.
struct FrequencyGrid {
    double spacing = 0.0;
    std::vector<double> values;
};

/// xi_m = pi*m/L for m in [-N/2, N/2).
inline FrequencyGrid fourier_grid(const SignalGrid& g) {
    FrequencyGrid fg;
    fg.spacing = g.freq_spacing();
    fg.values.resize(g.n());
    for (int i = 0; i < g.n(); ++i) fg.values[i] = g.freq(i);
    return fg;
}

/// Geometric scale lattice a_k = a_min * (a_max/a_min)^{k/(K-1)}.
///
/// Log spacing turns the measure da/a into a uniform measure in log a with
/// node weight log(a_max/a_min)/(K-1).
class ScaleGrid {
public:
    ScaleGrid(double a_min, double a_max, int count)
        : a_min_(a_min), a_max_(a_max), count_(count) {
        if (!(a_min > 0.0) || !(a_max > a_min))
            throw ParameterError("ScaleGrid: need 0 < a_min < a_max");
        if (count < 2)
            throw ParameterError("ScaleGrid: need at least 2 scales");
        values_.resize(count);
        const double dl = log_step();
        for (int k = 0; k < count; ++k)
            values_[k] = a_min_ * std::exp(k * dl);
        values_.back() = a_max_;
    }

    double a_min() const { return a_min_; }
    double a_max() const { return a_max_; }
    int count() const { return count_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](int k) const { return values_[k]; }

    double log_step() const { return std::log(a_max_ / a_min_) / (count_ - 1); }

    /// Composite trapezoid weights in log a for the da/a integral.
    std::vector<double> quadrature_weights() const {
        std::vector<double> w(count_, log_step());
        w.front() *= 0.5;
        w.back() *= 0.5;
        return w;
    }

    bool operator==(const ScaleGrid& o) const {
        return a_min_ == o.a_min_ && a_max_ == o.a_max_ && count_ == o.count_;
    }

private:
    double a_min_, a_max_;
    int count_;
    std::vector<double> values_;
};

} // namespace gsw
