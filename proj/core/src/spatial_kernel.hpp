#pragma once

#include <array>

#include "gsw/wavelet.hpp"

namespace gsw::detail {

/// Spatial samples of (d^beta w)(y) on a uniform table with Catmull-Rom
/// interpolation, for the direct-quadrature oracles.
///
/// 1D tables come from trapezoid quadrature of the inversion integral
/// (2pi)^{-1} \int (i xi)^beta w^(xi) e^{i y xi} d xi over the compact
/// spectral support, keeping the oracle independent of the FFT path.  2D
/// tables are built on a padded, refined lattice via the inverse FFT: the
/// quadrature that matters (the spatial b-sum) remains direct.
class SpatialKernel {
public:
    SpatialKernel(const WaveletSpec& w, std::array<int, 2> beta, double y_extent);

    cplx operator()(std::array<double, 2> y) const;

    /// Sum over lattice images sum_m k(y + m * period) within the table; the
    /// grid operators act on the torus, so their oracle kernel is the
    /// periodization of w at the (dilated) grid period.
    cplx periodized(std::array<double, 2> y, double period) const;

    int dim() const { return dim_; }

private:
    void build_1d(const WaveletSpec& w, int beta, double y_extent);
    void build_2d(const WaveletSpec& w, std::array<int, 2> beta, double y_extent);

    cplx interp_1d(double y) const;
    cplx interp_2d(std::array<double, 2> y) const;
    cplx node(int i, int j) const;

    int dim_ = 1;
    double dy_ = 0.0;
    double y0_ = 0.0;   // coordinate of table node 0 (per axis)
    int n_ = 0;         // nodes per axis
    std::vector<cplx> table_;
};

} // namespace gsw::detail
