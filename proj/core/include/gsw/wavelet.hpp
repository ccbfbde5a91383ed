#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsw/bump.hpp"
#include "gsw/field.hpp"

namespace gsw {

/// Regularity/decay indices of the analyzing class.  rho2 > 1 is required so
/// compactly supported Fourier-side profiles exist.
struct GevreyIndices {
    double rho1;
    double rho2;

    GevreyIndices(double r1, double r2) : rho1(r1), rho2(r2) {
        if (!(rho1 > 0.0)) throw ParameterError("GevreyIndices: rho1 must be positive");
        if (!(rho2 > 1.0)) throw ParameterError("GevreyIndices: rho2 must exceed 1");
    }
};

/// One Fourier-side bump supported on the closed ball B(center, radius):
/// amplitude * exp(R^{-2q} - (R^2 - d^2)^{-q}) with d the distance to the
/// center and q = 1/(2(order-1)).  On a 1D interval this coincides with the
/// GevreyBump on [center-R, center+R].
struct BallBump {
    std::array<double, 2> center{0.0, 0.0};
    double radius = 0.5;
    double order = 2.0;
    double amplitude = 1.0;
};

/// Closed-form spectrum descriptions.  Every model evaluates anywhere in the
/// frequency plane; transforms prefer this over lattice interpolation.
struct BallBumpSumModel {
    int dim = 1;
    std::vector<BallBump> bumps;
};

/// Rotation-invariant annular profile (r0 > 0 keeps the origin outside).
struct RadialModel {
    int dim = 1;
    GevreyBump profile;
};

/// Spectrum known only by its lattice samples; evaluated off-lattice by
/// band-limited (sinc) interpolation restricted to |xi| <= support_radius.
struct SampledModel {
    SampledSpectrum samples;
    double support_radius;
};

class SpectrumModel;

/// eta(|xi|) * base(xi) / g(xi/|xi|): the reconstruction-wavelet form.  In 2D
/// g is linearly interpolated between equally spaced table angles; in 1D the
/// table holds the two values for xi > 0 and xi < 0.
struct RatioModel {
    PlateauProfile eta;
    std::shared_ptr<const SpectrumModel> base;
    std::vector<double> g_table;
};

class SpectrumModel {
public:
    using Storage = std::variant<BallBumpSumModel, RadialModel, SampledModel, RatioModel>;

    explicit SpectrumModel(Storage s) : storage_(std::move(s)) {}

    int dim() const;
    bool closed_form() const;
    /// Values are real for every closed-form model in this toolkit.
    bool real_valued() const;
    cplx eval(std::array<double, 2> xi) const;
    double eval_real(std::array<double, 2> xi) const { return eval(xi).real(); }
    /// Radial support [lo, hi]: eval vanishes for |xi| outside.
    std::array<double, 2> radial_support() const;
    SpectrumModel scaled(double factor) const;

    const Storage& storage() const { return storage_; }

private:
    Storage storage_;
};

/// A wavelet given in the Fourier domain: construction parameters (when
/// closed-form) plus the materialized lattice samples.
struct WaveletSpec {
    GevreyIndices indices;
    std::string label;
    SpectrumModel model;
    SampledSpectrum spectrum;

    cplx eval_hat(std::array<double, 2> xi) const { return model.eval(xi); }
    int dim() const { return spectrum.grid.dim(); }
};

/// Materializes a model on the frequency lattice of `grid`.
SampledSpectrum sample_model(const SpectrumModel& model, const SignalGrid& grid);

WaveletSpec make_wavelet(GevreyIndices idx, std::string label, SpectrumModel model,
                         const SignalGrid& grid);

/// Wavelet from externally supplied lattice samples.  support_radius bounds
/// the spectral support; defaults to the lattice Nyquist frequency.
WaveletSpec make_sampled_wavelet(GevreyIndices idx, std::string label,
                                 SampledSpectrum spectrum,
                                 std::optional<double> support_radius = std::nullopt);

/// Sum of Fourier bumps on the balls B(+-e_j/2, 1/2), j = 1..dim, with bump
/// order = indices.rho2.  The spectrum is real, nonnegative and even, so the
/// wavelet is real and even; it vanishes at xi = 0 together with all
/// derivatives, i.e. every moment vanishes.
WaveletSpec design_directional_wavelet(int dim, GevreyIndices indices,
                                       const SignalGrid& grid,
                                       std::string label = "directional");

/// Rotation-invariant wavelet with annular profile on [r0, r1], r0 > 0.
WaveletSpec design_radial_wavelet(int dim, GevreyIndices indices, const SignalGrid& grid,
                                  double r0 = 0.5, double r1 = 2.0,
                                  std::string label = "radial");

/// Multiplies the spectrum (and closed form) by a constant.
WaveletSpec scale_wavelet(const WaveletSpec& w, double factor);

/// Wavelet whose spectrum is xi -> conj(w^(-xi)); analyzes with conj(w).
WaveletSpec conjugate_wavelet(const WaveletSpec& w);

struct MomentReport {
    int max_order = 0;
    /// Worst |mu_m| estimate per total order |m| = 0..max_order.
    std::vector<double> moment_bounds;
    bool verdict = false;
    double tolerance = 0.0;      // absolute threshold tol * max|spectrum|
    double stencil = 0.0;        // finite-difference step actually used
};

/// Estimates mu_m = i^{|m|} d^m psi^(0) by central finite differences of the
/// spectrum near xi = 0 and compares against tol * max|spectrum|.
///
/// Closed-form spectra are probed with a stencil far below the lattice
/// spacing, which resolves profiles that are flat-but-nonzero arbitrarily
/// close to the origin (the directional design's bumps touch it).  Sampled
/// spectra use the lattice spacing itself; orders the lattice cannot support
/// raise ResolutionError.
MomentReport check_vanishing_moments(const WaveletSpec& w, int max_order, double tol);

struct NondegeneracyReport {
    bool verdict = false;
    std::array<double, 2> worst_direction{0.0, 0.0};
    double worst_mass = 0.0;
    double tolerance = 0.0;
};

/// mass(omega) = max over sampled radii of |psi^(r omega)|; the verdict
/// requires min over directions to exceed tol * max|spectrum|.
NondegeneracyReport check_nondegenerate(const WaveletSpec& w, int n_directions,
                                        int n_radii, double tol = 1e-8);

/// JSON round trip (construction parameters; spectra embedded as base64 of
/// the binary container when no closed form exists or on request).
std::string wavelet_to_json(const WaveletSpec& w, bool embed_spectrum = false);
WaveletSpec wavelet_from_json(const std::string& text);

} // namespace gsw
