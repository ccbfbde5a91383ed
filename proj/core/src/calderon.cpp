#include "gsw/calderon.hpp"

#include <cmath>

#include "json.hpp"

#include "gsw/fft.hpp"
#include "gsw/synthesis.hpp"

namespace gsw {

namespace {

// moments of f up to order 4 from lattice-step central differences of f^,
// relative to ||f^||_inf
double worst_relative_moment(const SampledSignal& f) {
    WaveletSpec probe = make_sampled_wavelet(GevreyIndices(0.5, 2.0), "lizorkin-probe",
                                             forward_fft(f));
    MomentReport rep = check_vanishing_moments(probe, 4, 1.0);
    double worst = 0.0;
    for (double b : rep.moment_bounds) worst = std::max(worst, b);
    return rep.tolerance > 0.0 ? worst / rep.tolerance : 0.0;
}

bool interior(const SignalGrid& g, int j) {
    return std::abs(g.coord(j)) <= 0.8 * g.half_extent();
}

} // namespace

std::pair<SampledSignal, ReconstructionReport> reconstruct(
    const SampledSignal& f, const ReconstructionPair& pair, const ScaleGrid& agrid,
    bool allow_moment_violation) {
    if (!(std::abs(pair.c) > 0.0))
        throw NumericalError("reconstruct: degenerate pair (c = 0)");

    ReconstructionReport rep;
    rep.c = pair.c;
    rep.direction_spread = pair.direction_spread;
    rep.dim = f.grid.dim();
    rep.n = f.grid.n();
    rep.half_extent = f.grid.half_extent();
    rep.scale_count = agrid.count();
    rep.a_min = agrid.a_min();
    rep.a_max = agrid.a_max();
    rep.sigma = pair.psi.indices.rho1 + pair.psi.indices.rho2 - 1.0;

    const double fpeak = forward_fft(f).max_abs();
    if (fpeak > 0.0) {
        rep.worst_moment = worst_relative_moment(f);
        rep.lizorkin_ok = rep.worst_moment <= 1e-6;
        if (!rep.lizorkin_ok && !allow_moment_violation)
            throw NumericalError(
                "reconstruct: input moments are not numerically Lizorkin-class "
                "(pass the override to proceed)");
    }

    HalfSpaceField W = cwt_fourier(f, pair.psi, agrid);
    SampledSignal rec = synthesis_fourier(W, pair.phi);
    const cplx inv_c = 1.0 / pair.c;
    for (auto& z : rec.values) z *= inv_c;

    const SignalGrid& g = f.grid;
    const int n = g.n();
    double num2 = 0.0, den2 = 0.0, nsup = 0.0, dsup = 0.0;
    auto accumulate = [&](std::size_t idx) {
        const double d = std::abs(rec.values[idx] - f.values[idx]);
        const double v = std::abs(f.values[idx]);
        num2 += d * d;
        den2 += v * v;
        nsup = std::max(nsup, d);
        dsup = std::max(dsup, v);
    };
    if (g.dim() == 1) {
        for (int j = 0; j < n; ++j)
            if (interior(g, j)) accumulate(j);
    } else {
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 < n; ++j1)
                if (interior(g, j0) && interior(g, j1))
                    accumulate(static_cast<std::size_t>(j0) * n + j1);
    }
    rep.rel_l2_error = den2 > 0.0 ? std::sqrt(num2 / den2) : std::sqrt(num2);
    rep.rel_sup_error = dsup > 0.0 ? nsup / dsup : nsup;
    return {std::move(rec), rep};
}

cplx desingularized_pairing(const SampledSignal& f, const SampledSignal& phi_test,
                            const ReconstructionPair& pair, const ScaleGrid& agrid,
                            bool allow_moment_violation) {
    if (!(f.grid == phi_test.grid))
        throw ParameterError("desingularized_pairing: incompatible grids");
    if (!(std::abs(pair.c) > 0.0))
        throw NumericalError("desingularized_pairing: degenerate pair (c = 0)");
    if (!allow_moment_violation && forward_fft(f).max_abs() > 0.0 &&
        worst_relative_moment(f) > 1e-6)
        throw NumericalError(
            "desingularized_pairing: input moments are not numerically "
            "Lizorkin-class (pass the override to proceed)");

    HalfSpaceField W1 = cwt_fourier(f, pair.psi, agrid);
    HalfSpaceField W2 = cwt_fourier(phi_test, conjugate_wavelet(pair.phi), agrid);

    const auto w = agrid.quadrature_weights();
    double dv = f.grid.spacing();
    if (f.grid.dim() == 2) dv *= dv;
    cplx acc(0.0);
    for (int k = 0; k < agrid.count(); ++k) {
        const cplx* p1 = W1.slab(k);
        const cplx* p2 = W2.slab(k);
        cplx s(0.0);
        for (std::size_t j = 0; j < f.grid.size(); ++j) s += p1[j] * p2[j];
        acc += s * (w[k] * dv);
    }
    return acc / pair.c;
}

cplx grid_pairing(const SampledSignal& f, const SampledSignal& g) {
    if (!(f.grid == g.grid)) throw ParameterError("grid_pairing: incompatible grids");
    cplx acc(0.0);
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * g.values[i];
    double dv = f.grid.spacing();
    if (f.grid.dim() == 2) dv *= dv;
    return acc * dv;
}

std::string report_to_json(const ReconstructionReport& rep) {
    nlohmann::json j{{"c", {rep.c.real(), rep.c.imag()}},
                     {"direction_spread", rep.direction_spread},
                     {"rel_l2_error", rep.rel_l2_error},
                     {"rel_sup_error", rep.rel_sup_error},
                     {"grid", {{"dim", rep.dim}, {"N", rep.n}, {"L", rep.half_extent}}},
                     {"scales",
                      {{"a_min", rep.a_min}, {"a_max", rep.a_max}, {"K", rep.scale_count}}},
                     {"lizorkin_ok", rep.lizorkin_ok},
                     {"worst_moment", rep.worst_moment},
                     {"sigma_hypothesis",
                      {{"sigma", rep.sigma}, {"status", "declared, not verified"}}}};
    return j.dump(2);
}

} // namespace gsw
