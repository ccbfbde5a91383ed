// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gsw/calderon.hpp"
#include "gsw/fft.hpp"
#include "gsw/seminorms.hpp"
#include "gsw/signals.hpp"
#include "gsw/synthesis.hpp"
#include "gsw/transform.hpp"

using namespace gsw;

namespace {

struct Criterion {
    std::string name;
    std::function<std::pair<bool, std::string>()> body;
};

const SignalGrid& grid1d() {
    static SignalGrid g(1, 1024, 32.0);
    return g;
}

const WaveletSpec& psi1d() {
    static WaveletSpec w =
        design_directional_wavelet(1, GevreyIndices(0.5, 2.0), grid1d());
    return w;
}

const ReconstructionPair& pair1d() {
    static ReconstructionPair p =
        build_reconstruction_wavelet(psi1d(), default_plateau(psi1d()));
    return p;
}

std::pair<bool, std::string> reconstruction_constant() {
    bool ok = true;
    std::ostringstream os;

    auto rep = admissibility_constant(pair1d().psi, pair1d().phi, 2, 1024);
    double worst1 = 0.0;
    for (const auto& ci : rep.per_direction)
        worst1 = std::max(worst1, std::abs(ci - cplx(1.0)));
    ok = ok && worst1 <= 1e-6;
    os << "1D |c(w)-1| = " << worst1 << " (<= 1e-6)";

    SignalGrid g2(2, 128, 16.0);
    WaveletSpec psi2 = design_directional_wavelet(2, GevreyIndices(0.5, 2.0), g2);
    ReconstructionPair p2 =
        build_reconstruction_wavelet(psi2, default_plateau(psi2), 256, 512);
    auto rep2 = admissibility_constant(p2.psi, p2.phi, 256, 1024);
    double worst2 = 0.0;
    for (const auto& ci : rep2.per_direction)
        worst2 = std::max(worst2, std::abs(ci - cplx(1.0)));
    ok = ok && worst2 <= 1e-5;
    os << "; 2D over 256 dirs = " << worst2 << " (<= 1e-5)";
    return {ok, os.str()};
}

std::pair<bool, std::string> calderon_identity() {
    SampledSignal f = make_bump_spectrum_signal(grid1d());
    double err64 = 0.0, err128 = 0.0;
    {
        ScaleGrid ag(1.0 / 16.0, 16.0, 64);
        err64 = reconstruct(f, pair1d(), ag).second.rel_l2_error;
    }
    {
        ScaleGrid ag(1.0 / 16.0, 16.0, 128);
        err128 = reconstruct(f, pair1d(), ag).second.rel_l2_error;
    }
    const bool ok = err64 <= 1e-3 && err128 < err64;
    std::ostringstream os;
    os << "rel_l2(K=64) = " << err64 << " (<= 1e-3), rel_l2(K=128) = " << err128
       << " (decreasing)";
    return {ok, os.str()};
}

std::pair<bool, std::string> desingularization() {
    SampledSignal f = make_bump_spectrum_signal(grid1d());
    SampledSignal phi_t =
        translate_signal(make_bump_spectrum_signal(grid1d(), 0.4, 1.5), 32);
    ScaleGrid ag(1.0 / 16.0, 16.0, 64);
    const cplx direct = grid_pairing(f, phi_t);
    const cplx via = desingularized_pairing(f, phi_t, pair1d(), ag);
    const double rel = std::abs(via - direct) / std::abs(direct);
    std::ostringstream os;
    os << "pairing relative error = " << rel << " (<= 1e-4)";
    return {rel <= 1e-4, os.str()};
}

std::pair<bool, std::string> oracle_equivalence() {
    SampledSignal f = make_bump_spectrum_signal(grid1d());
    const int n = grid1d().n();

    ScaleGrid ag(std::pow(2.0, -1.5), std::pow(2.0, 1.5), 8);
    std::vector<ProbePoint> pts;
    std::vector<std::pair<int, int>> latt;
    for (int k = 0; k < 8; ++k)
        for (int i = 0; i < 8; ++i) {
            const int j = n / 2 - 56 + 16 * i;
            pts.push_back({{grid1d().coord(j), 0.0}, ag[k]});
            latt.emplace_back(k, j);
        }
    HalfSpaceField W = cwt_fourier(f, psi1d(), ag);
    DirectTransformResult direct = cwt_direct(f, psi1d(), pts);
    double peak = W.max_abs(), errw = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        errw = std::max(errw,
                        std::abs(W.values[latt[i].first * grid1d().size() +
                                          latt[i].second] -
                                 direct.values[i]));
    const double relw = errw / peak;

    ScaleGrid ags(0.25, 4.0, 17);
    HalfSpaceField Ws = cwt_fourier(f, psi1d(), ags);
    SampledSignal rec = synthesis_fourier(Ws, psi1d());
    std::vector<std::array<double, 2>> xs;
    std::vector<int> idx;
    for (int i = 0; i < 16; ++i) {
        const int j = n / 2 - 120 + 16 * i;
        xs.push_back({grid1d().coord(j), 0.0});
        idx.push_back(j);
    }
    auto sdirect = synthesis_direct(Ws, psi1d(), xs);
    double rpeak = 0.0;
    for (auto& z : rec.values) rpeak = std::max(rpeak, std::abs(z));
    double errs = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        errs = std::max(errs, std::abs(rec.values[idx[i]] - sdirect[i]));
    const double rels = errs / rpeak;

    std::ostringstream os;
    os << "cwt 8x8 rel = " << relw << ", synthesis 16pt rel = " << rels
       << " (both <= 1e-6)";
    return {relw <= 1e-6 && rels <= 1e-6, os.str()};
}

std::pair<bool, std::string> adjointness() {
    ScaleGrid ag(0.25, 4.0, 17);
    const auto w = ag.quadrature_weights();
    const double dx = grid1d().spacing();
    double worst = 0.0;
    for (std::uint64_t seed : {101, 202, 303}) {
        HalfSpaceField Phi = random_smooth_field(grid1d(), ag, 0.3, 2.5, seed);
        SampledSignal f = random_smooth_signal(grid1d(), 0.3, 2.5, seed + 7, false);
        HalfSpaceField W = cwt_fourier(f, psi1d(), ag);
        SampledSignal M = synthesis_fourier(Phi, conjugate_wavelet(psi1d()));
        cplx lhs(0.0);
        for (std::size_t i = 0; i < M.values.size(); ++i)
            lhs += M.values[i] * f.values[i];
        lhs *= dx;
        cplx rhs(0.0);
        for (int k = 0; k < ag.count(); ++k) {
            const cplx* pa = Phi.slab(k);
            const cplx* pw = W.slab(k);
            cplx acc(0.0);
            for (std::size_t j = 0; j < grid1d().size(); ++j) acc += pa[j] * pw[j];
            rhs += acc * (w[k] * dx);
        }
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    std::ostringstream os;
    os << "worst relative mismatch over 3 seeded pairs = " << worst << " (<= 1e-8)";
    return {worst <= 1e-8, os.str()};
}

std::pair<bool, std::string> seminorm_equivalence() {
    ScaleGrid ag(1.0 / 16.0, 16.0, 64);
    const std::vector<double> sweep{0.25, 0.5};
    struct Entry {
        HalfSpaceField field;
        HalfSpaceIndices idx;
    };
    std::vector<Entry> suite;
    suite.push_back({make_separable_field(grid1d(), ag, BProfile::Gaussian,
                                          AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 0.5, 1.0, 1.0)});
    suite.push_back({make_separable_field(grid1d(), ag, BProfile::Poly4,
                                          AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 0.5, 1.0, 1.0)});
    suite.push_back({make_separable_field(grid1d(), ag, BProfile::Sech,
                                          AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 1.0, 1.0, 1.0)});
    HalfSpaceIndices idxt(1.0, 4.0, 2.0, 3.0);
    suite.push_back(
        {cwt_fourier(make_bump_spectrum_signal(grid1d()), psi1d(), ag), idxt});
    suite.push_back(
        {cwt_fourier(make_flat_gauss_signal(grid1d()), psi1d(), ag), idxt});
    suite.push_back(
        {cwt_fourier(translate_signal(make_bump_spectrum_signal(grid1d()), 48),
                     psi1d(), ag),
         idxt});

    bool agree = true;
    for (const auto& e : suite) {
        SeminormReport rp = halfspace_seminorm_sweep(SeminormKind::HalfP, e.field,
                                                     e.idx, sweep, SeminormCaps{});
        SeminormReport rq = halfspace_seminorm_sweep(SeminormKind::HalfQ, e.field,
                                                     e.idx, sweep, SeminormCaps{});
        for (std::size_t i = 0; i < sweep.size(); ++i)
            agree = agree && rp.finite[i] == rq.finite[i];
    }

    HalfSpaceIndices idx(0.5, 0.5, 1.0, 1.0);
    const double p8 = halfspace_seminorm_p(suite[0].field, idx, 0.5, {8, 8, 8});
    const double p10 = halfspace_seminorm_p(suite[0].field, idx, 0.5, {10, 10, 10});
    const double q8 = halfspace_seminorm_q(suite[0].field, idx, 0.5, {8, 8, 8});
    const double q10 = halfspace_seminorm_q(suite[0].field, idx, 0.5, {10, 10, 10});
    const bool paper_ok = std::isfinite(p8) && std::isfinite(q8) &&
                          std::abs(p10 - p8) <= 0.01 * p10 &&
                          std::abs(q10 - q8) <= 0.01 * q10;

    std::ostringstream os;
    os << "p/q verdicts agree on 6 fields = " << (agree ? "yes" : "NO")
       << "; paper field finite at h=0.5 with cap stability "
       << std::abs(p10 - p8) / p10 << ", " << std::abs(q10 - q8) / q10 << " (<= 1%)";
    return {agree && paper_ok, os.str()};
}

std::pair<bool, std::string> decay_exponents() {
    SignalGrid g(1, 4096, 128.0);
    WaveletSpec psi = design_directional_wavelet(1, GevreyIndices(0.5, 2.0), g);
    ScaleGrid ag(1.0 / 16.0, 16.0, 64);
    HalfSpaceField W = cwt_fourier(make_flat_gauss_signal(g), psi, ag);
    DecayFit fit = decay_fit(W, 2.5, 3.0, 0.5, 2.0);
    const bool fits_ok =
        fit.a_inf.r_squared >= 0.95 && fit.a_zero.r_squared >= 0.95 &&
        fit.b_decay.r_squared >= 0.95 && fit.a_inf.rate > 0.0 &&
        fit.a_zero.rate > 0.0 && fit.b_decay.rate > 0.0 &&
        fit.a_inf.band_hi / fit.a_inf.band_lo >= 10.0 &&
        fit.a_zero.band_hi / fit.a_zero.band_lo >= 10.0 &&
        fit.b_decay.band_hi / fit.b_decay.band_lo >= 10.0;

    HalfSpaceField sep = make_separable_field(grid1d(), ag, BProfile::Gaussian,
                                              AProfile::ExpBoth);
    DecayFit sfit = decay_fit(sep, 2.0, 2.0, 1.0, 1.0);
    const bool slice_ok = std::abs(sfit.a_inf.rate - 1.0) <= 0.10;

    std::ostringstream os;
    os << "R2 = {" << fit.a_inf.r_squared << ", " << fit.a_zero.r_squared << ", "
       << fit.b_decay.r_squared << "} (>= 0.95), rates positive; e^{-a} slice rate = "
       << sfit.a_inf.rate << " (1 +- 10%)";
    return {fits_ok && slice_ok, os.str()};
}

std::pair<bool, std::string> invariance_suite() {
    bool ok = true;
    std::ostringstream os;

    MomentReport m1 = check_vanishing_moments(psi1d(), 10, 1e-8);
    SignalGrid g2(2, 128, 16.0);
    WaveletSpec psi2 = design_directional_wavelet(2, GevreyIndices(0.5, 2.0), g2);
    MomentReport m2 = check_vanishing_moments(psi2, 10, 1e-8);
    ok = ok && m1.verdict && m2.verdict;
    os << "moments(1D,2D to order 10 at 1e-8) = " << (m1.verdict ? "pass" : "FAIL")
       << "/" << (m2.verdict ? "pass" : "FAIL");

    // translation covariance of the transform to 1e-10
    ScaleGrid ag(0.25, 4.0, 9);
    SampledSignal f = make_bump_spectrum_signal(grid1d());
    HalfSpaceField W = cwt_fourier(f, psi1d(), ag);
    HalfSpaceField Ws = cwt_fourier(translate_signal(f, 64), psi1d(), ag);
    const int n = grid1d().n();
    double terr = 0.0;
    for (int k = 0; k < ag.count(); ++k) {
        const cplx* a = W.slab(k);
        const cplx* b = Ws.slab(k);
        for (int j = 0; j < n; ++j)
            terr = std::max(terr, std::abs(b[(j + 64) % n] - a[j]));
    }
    terr /= W.max_abs();
    ok = ok && terr <= 1e-10;
    os << "; translation = " << terr << " (<= 1e-10)";

    // Parseval and round trip
    SampledSignal r = random_smooth_signal(grid1d(), 0.3, 3.0, 99, false);
    SampledSpectrum rhat = forward_fft(r);
    const double parseval =
        std::abs(l2_norm_sq_space(r) - l2_norm_sq_freq(rhat)) / l2_norm_sq_space(r);
    ok = ok && parseval <= 1e-10;
    os << "; parseval = " << parseval << " (<= 1e-10)";

    SampledSignal back = inverse_fft(rhat);
    double peak = 0.0, rerr = 0.0;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        peak = std::max(peak, std::abs(r.values[i]));
        rerr = std::max(rerr, std::abs(back.values[i] - r.values[i]));
    }
    ok = ok && rerr <= 1e-12 * peak;
    os << "; fft round trip = " << rerr / peak << " (<= 1e-12)";
    return {ok, os.str()};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"reconstruction-wavelet constant c = 1", reconstruction_constant},
        {"Calderon identity at reference resolution", calderon_identity},
        {"desingularized pairing matches direct pairing", desingularization},
        {"fourier/direct oracle equivalence", oracle_equivalence},
        {"analysis/synthesis adjointness", adjointness},
        {"seminorm p/q equivalence on the regression suite", seminorm_equivalence},
        {"decay exponents from the reference field", decay_exponents},
        {"vanishing moments and invariance suite", invariance_suite},
    };

    int failures = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto c0 = std::chrono::steady_clock::now();
        std::pair<bool, std::string> result{false, "exception"};
        try {
            result = criteria[i].body();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
                .count();
        std::printf("[%s] %zu. %s: %s (%.2fs)\n", result.first ? "PASS" : "FAIL",
                    i + 1, criteria[i].name.c_str(), result.second.c_str(), secs);
        std::fflush(stdout);
        if (!result.first) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%zu criteria passed in %.2fs\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures;
}
