#pragma once

#include "gsw/field.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// M_phi Phi: integral of dilated-translated copies of phi against the field
/// with measure db da/a.  Realized in frequency: the synthesized spectrum is
/// sum_k w_k F1Phi(xi, a_k) phi^(a_k xi) with log-trapezoid weights w_k, the
/// inner b-integral being an exact convolution per scale.  Scale aliasing
/// follows the transform policy.
SampledSignal synthesis_fourier(const HalfSpaceField& field, const WaveletSpec& phi);

/// Direct double quadrature (trapezoid in b per scale, log-trapezoid in a)
/// at the given points; the oracle for synthesis_fourier.  Intended for small
/// point sets.
std::vector<cplx> synthesis_direct(const HalfSpaceField& field, const WaveletSpec& phi,
                                   const std::vector<std::array<double, 2>>& points);

} // namespace gsw
