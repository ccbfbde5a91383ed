#pragma once

#include "gsw/wavelet.hpp"

namespace gsw {

/// Companion pair: c is the admissibility constant of (psi, phi) and
/// direction_spread = max over sampled directions of |c(omega) - c| / |c|.
struct ReconstructionPair {
    WaveletSpec psi;
    WaveletSpec phi;
    cplx c{0.0, 0.0};
    double direction_spread = 0.0;
};

/// g(omega) = \int eta(r) |psi^(r omega)|^2 dr/r by log-trapezoid quadrature
/// on [support_lo(eta)/2, 2 support_hi(eta)].  Throws DegenerateWaveletError
/// when the value is numerically zero along omega.
double auxiliary_g(const WaveletSpec& psi, const PlateauProfile& eta,
                   std::array<double, 2> omega, int n_radial = 512);

/// phi^(xi) = eta(|xi|) psi^(xi) / g(xi/|xi|); by construction
/// c_{psi,phi}(omega) = 1 for every direction.  In 2D the g table holds
/// n_angles equally spaced angles; in 1D the two signs.
ReconstructionPair build_reconstruction_wavelet(const WaveletSpec& psi,
                                                const PlateauProfile& eta,
                                                int n_angles = 256,
                                                int n_radial = 512);

/// Default plateau for a wavelet with known radial support [lo, hi]:
/// a narrow plateau around the support midpoint with long mollifier ramps
/// filling [lo + width/8, hi - width/8].  Long ramps keep the scale-
/// quadrature multiplier flat at moderate scale counts.
PlateauProfile default_plateau(const WaveletSpec& psi);

struct AdmissibilityReport {
    cplx c{0.0, 0.0};
    double direction_spread = 0.0;
    std::vector<cplx> per_direction;
    std::vector<std::array<double, 2>> directions;
};

/// Per-direction log-grid quadrature of \int conj(psi^)(r omega) phi^(r omega)
/// dr/r; c is the mean over directions.  Throws NumericalError when the pair
/// is not admissible (c ~ 0 overall or along some direction).
AdmissibilityReport admissibility_constant(const WaveletSpec& psi,
                                           const WaveletSpec& phi,
                                           int n_directions, int n_radial = 1024);

/// Rotation-invariant psi is its own reconstruction wavelet with
/// c = \int |psi^(r)|^2 dr/r.
ReconstructionPair self_reconstruction_pair(const WaveletSpec& psi,
                                            int n_directions = 256,
                                            int n_radial = 1024);

std::string pair_to_json(const ReconstructionPair& pair, bool embed_spectra = false);
ReconstructionPair pair_from_json(const std::string& text);

} // namespace gsw
