#pragma once

#include "gsw/field.hpp"

namespace gsw {

/// Discrete approximation of f^(xi) = \int f(x) e^{-i x xi} dx on the
/// frequency lattice, including the dx^dim quadrature factor and the phase
/// shift for the [-L, L) origin.  A symmetric real input yields a real,
/// symmetric spectrum.
SampledSpectrum forward_fft(const SampledSignal& sig);

/// Exact inverse of forward_fft (round trip is identity to ~1e-15 relative).
SampledSignal inverse_fft(const SampledSpectrum& spec);

/// Raw lattice transforms used slab-wise by the half-space operators.
/// `values` holds size() complex samples of one slab; in-place.
void forward_fft_slab(const SignalGrid& g, cplx* values);
void inverse_fft_slab(const SignalGrid& g, cplx* values);

/// Grid Parseval check helper: ||f||_2^2 computed in space.
double l2_norm_sq_space(const SampledSignal& sig);
/// (2pi)^{-dim} ||f^||_2^2 computed in frequency.
double l2_norm_sq_freq(const SampledSpectrum& spec);

} // namespace gsw
