#pragma once

#include "gsw/field.hpp"
#include "gsw/grid.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// Forward transform request.  beta is the multi-index of b-derivatives to
/// apply (|beta| <= 8; beta[1] ignored in 1D).
struct TransformRequest {
    SampledSignal signal;
    WaveletSpec wavelet;
    ScaleGrid scales;
    std::array<int, 2> beta{0, 0};
};

/// W_psi f on the half-space lattice: per scale, multiply f^(xi) by
/// conj(psi^(a xi)) (and by (i xi)^beta for derivatives), then invert the
/// partial transform.  Scales whose spectral support would cross the lattice
/// Nyquist raise AliasingError identifying the offending index.
HalfSpaceField cwt_fourier(const TransformRequest& req);
HalfSpaceField cwt_fourier(const SampledSignal& f, const WaveletSpec& w,
                           const ScaleGrid& scales, std::array<int, 2> beta = {0, 0});

struct ProbePoint {
    std::array<double, 2> b{0.0, 0.0};
    double a = 1.0;
};

struct DirectTransformResult {
    std::vector<cplx> values;
    std::vector<std::string> warnings;   // per-point "underresolved scale" notes
};

/// Direct trapezoid quadrature of the defining integral
///   a^{-n} \int f(x) conj(psi)((x - b)/a) dx
/// at the given points; the independent oracle for cwt_fourier.  Derivative
/// orders are supported in 1D.
DirectTransformResult cwt_direct(const SampledSignal& f, const WaveletSpec& w,
                                 const std::vector<ProbePoint>& points,
                                 std::array<int, 2> beta = {0, 0});

/// Per-scale Fourier transform in b (forward: e^{-i b xi}; inverse undoes it
/// exactly).  The returned field shares the grids; with forward=true the
/// spatial axis holds the frequency lattice of sgrid.
HalfSpaceField partial_fourier(const HalfSpaceField& field, bool forward);

} // namespace gsw
