#pragma once

#include <cstdint>

#include "gsw/field.hpp"

namespace gsw {

/// Real, even signal whose spectrum is the Gevrey annulus bump on
/// r0 <= |xi| <= r1: band-limited with all moments numerically zero.
SampledSignal make_bump_spectrum_signal(const SignalGrid& grid, double r0 = 0.5,
                                        double r1 = 2.0, double order = 2.0);

/// Gaussian e^{-|x|^2 / (2 sigma^2)} sampled in space (no vanishing moments).
SampledSignal make_gaussian_signal(const SignalGrid& grid, double sigma = 1.0);

/// Real, even signal with spectrum e^{-|xi|^2 - flat/|xi|}: flat to all
/// orders at xi = 0 with subexponential spatial decay on both scale ends of
/// its transform.
SampledSignal make_flat_gauss_signal(const SignalGrid& grid, double flat = 1.0);

/// Grid-aligned circular translate by `nodes` lattice steps per axis.
SampledSignal translate_signal(const SampledSignal& f, int nodes0, int nodes1 = 0);

enum class BProfile { Gaussian, Sech, Poly4 };
enum class AProfile { ExpBoth, Constant };

/// Separable field g(b) f(a): Gaussian = e^{-|b|^2}, Sech = sech(b1)sech(b2),
/// Poly4 = (1+|b|^2)^{-2}; ExpBoth = e^{-a - 1/a}, Constant = 1.
HalfSpaceField make_separable_field(const SignalGrid& sgrid, const ScaleGrid& agrid,
                                    BProfile b_kind, AProfile a_kind);

/// Band-limited random smooth signal: spectrum = annulus envelope times
/// deterministic pseudo-random coefficients (platform-independent).
SampledSignal random_smooth_signal(const SignalGrid& grid, double band_lo,
                                   double band_hi, std::uint64_t seed,
                                   bool real_part = true);

/// Random smooth-in-b field: per-scale random band-limited slabs with a
/// log-normal scale envelope.
HalfSpaceField random_smooth_field(const SignalGrid& sgrid, const ScaleGrid& agrid,
                                   double band_lo, double band_hi,
                                   std::uint64_t seed);

} // namespace gsw
