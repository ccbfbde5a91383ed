#pragma once

#include "gsw/reconstruction.hpp"
#include "gsw/transform.hpp"

namespace gsw {

struct ReconstructionReport {
    cplx c{0.0, 0.0};
    double direction_spread = 0.0;
    double rel_l2_error = 0.0;
    double rel_sup_error = 0.0;
    // exact grids used, for reproducibility
    int dim = 0, n = 0, scale_count = 0;
    double half_extent = 0.0, a_min = 0.0, a_max = 0.0;
    bool lizorkin_ok = true;
    double worst_moment = 0.0;      // largest |mu_m| / ||f^||_inf, m <= 4
    // sigma = rho1 + rho2 - 1 < s is required by the desingularization
    // statement but cannot be certified from samples; declared, not checked
    double sigma = 0.0;
};

/// (1/c) M_phi W_psi f with error metrics against f on the interior 80% of
/// the grid.  The Lizorkin-class precondition (moments of f up to order 4
/// below 1e-6 relative) is enforced unless allow_moment_violation is set; a
/// violation is then recorded in the report instead.
std::pair<SampledSignal, ReconstructionReport> reconstruct(
    const SampledSignal& f, const ReconstructionPair& pair, const ScaleGrid& agrid,
    bool allow_moment_violation = false);

/// (1/c) \int\int W_psi f(b,a) W_conj(phi) phi_test(b,a) db da/a by the grid
/// quadrature (trapezoid in b, log-trapezoid in a); equals the bilinear
/// pairing \int f phi_test dx for admissible inputs.
cplx desingularized_pairing(const SampledSignal& f, const SampledSignal& phi_test,
                            const ReconstructionPair& pair, const ScaleGrid& agrid,
                            bool allow_moment_violation = false);

/// Bilinear grid pairing \int f g dx (no conjugation).
cplx grid_pairing(const SampledSignal& f, const SampledSignal& g);

std::string report_to_json(const ReconstructionReport& rep);

} // namespace gsw
