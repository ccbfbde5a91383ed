#include "gsw/reconstruction.hpp"

#include <cmath>

#include "json.hpp"

#include "gsw/parallel.hpp"

namespace gsw {

using json = nlohmann::json;

namespace {

std::vector<std::array<double, 2>> sample_directions(int dim, int n_directions) {
    if (dim == 1) return {{1.0, 0.0}, {-1.0, 0.0}};
    std::vector<std::array<double, 2>> dirs;
    dirs.reserve(n_directions);
    for (int i = 0; i < n_directions; ++i) {
        const double th = 2.0 * M_PI * i / n_directions;
        dirs.push_back({std::cos(th), std::sin(th)});
    }
    return dirs;
}

// log-trapezoid nodes for \int f(r) dr/r over [lo, hi]
template <typename F>
auto log_trapezoid(double lo, double hi, int n, F&& f) -> decltype(f(1.0)) {
    const double du = std::log(hi / lo) / (n - 1);
    decltype(f(1.0)) acc = f(lo) * 0.5;
    for (int i = 1; i + 1 < n; ++i) acc += f(lo * std::exp(i * du));
    acc += f(hi) * 0.5;
    return acc * du;
}

} // namespace

double auxiliary_g(const WaveletSpec& psi, const PlateauProfile& eta,
                   std::array<double, 2> omega, int n_radial) {
    if (n_radial < 16) throw ParameterError("auxiliary_g: too few radial nodes");
    const double lo = eta.support_lo() / 2.0;
    const double hi = 2.0 * eta.support_hi();
    const double g = log_trapezoid(lo, hi, n_radial, [&](double r) {
        const cplx v = psi.eval_hat({r * omega[0], r * omega[1]});
        return eta(r) * std::norm(v);
    });
    const double peak = psi.spectrum.max_abs();
    if (!(g > 1e-10 * peak * peak))
        throw DegenerateWaveletError("auxiliary_g: degenerate along direction (" +
                                     std::to_string(omega[0]) + ", " +
                                     std::to_string(omega[1]) + ")");
    return g;
}

PlateauProfile default_plateau(const WaveletSpec& psi) {
    const auto sup = psi.model.radial_support();
    const double width = sup[1] - sup[0];
    if (!(width > 0.0))
        throw NumericalError("default_plateau: wavelet has empty spectral support");
    return PlateauProfile(2.0, sup[0] + 0.45 * width, sup[0] + 0.55 * width,
                          0.1625 * width);
}

ReconstructionPair build_reconstruction_wavelet(const WaveletSpec& psi,
                                                const PlateauProfile& eta,
                                                int n_angles, int n_radial) {
    const auto sup = psi.model.radial_support();
    if (eta.plateau_hi() < sup[0] || eta.plateau_lo() > sup[1])
        throw NumericalError(
            "build_reconstruction_wavelet: plateau does not meet the spectral support");

    const int dim = psi.dim();
    const auto dirs = sample_directions(dim, n_angles);
    std::vector<double> g_table(dirs.size());
    std::exception_ptr failure;
    parallel_for(dirs.size(), [&](std::size_t i) {
        try {
            g_table[i] = auxiliary_g(psi, eta, dirs[i], n_radial);
        } catch (...) {
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    RatioModel model{eta, std::make_shared<SpectrumModel>(psi.model),
                     std::move(g_table)};
    WaveletSpec phi = make_wavelet(psi.indices, psi.label + "_rec",
                                   SpectrumModel(std::move(model)), psi.spectrum.grid);

    AdmissibilityReport rep = admissibility_constant(
        psi, phi, dim == 1 ? 2 : n_angles, 2 * n_radial);
    return ReconstructionPair{psi, std::move(phi), rep.c, rep.direction_spread};
}

AdmissibilityReport admissibility_constant(const WaveletSpec& psi,
                                           const WaveletSpec& phi,
                                           int n_directions, int n_radial) {
    if (psi.dim() != phi.dim())
        throw ParameterError("admissibility_constant: dimension mismatch");
    if (psi.spectrum.grid != phi.spectrum.grid)
        throw ParameterError("admissibility_constant: incompatible grids");
    const auto s1 = psi.model.radial_support();
    const auto s2 = phi.model.radial_support();
    const double lo = std::max(s1[0], s2[0]);
    const double hi = std::min(s1[1], s2[1]);
    if (!(hi > 0.0) || lo >= hi)
        throw NumericalError("admissibility_constant: not a reconstruction pair "
                             "(disjoint spectral supports)");

    AdmissibilityReport rep;
    rep.directions = sample_directions(psi.dim(), n_directions);
    rep.per_direction.assign(rep.directions.size(), cplx(0.0));
    const double qlo = std::max(lo, hi * 1e-6) / 2.0;
    const double qhi = 2.0 * hi;
    parallel_for(rep.directions.size(), [&](std::size_t i) {
        const auto om = rep.directions[i];
        rep.per_direction[i] = log_trapezoid(qlo, qhi, n_radial, [&](double r) {
            const std::array<double, 2> xi{r * om[0], r * om[1]};
            return std::conj(psi.eval_hat(xi)) * phi.eval_hat(xi);
        });
    });

    cplx mean(0.0);
    for (const auto& ci : rep.per_direction) mean += ci;
    mean /= static_cast<double>(rep.per_direction.size());
    rep.c = mean;

    const double scale = psi.spectrum.max_abs() * phi.spectrum.max_abs();
    if (!(std::abs(mean) > 1e-12 * scale))
        throw NumericalError("admissibility_constant: not a reconstruction pair (c ~ 0)");
    double min_abs = 1e300, max_abs = 0.0, spread = 0.0;
    for (const auto& ci : rep.per_direction) {
        min_abs = std::min(min_abs, std::abs(ci));
        max_abs = std::max(max_abs, std::abs(ci));
        spread = std::max(spread, std::abs(ci - mean) / std::abs(mean));
    }
    if (min_abs <= 1e-8 * max_abs)
        throw NumericalError(
            "admissibility_constant: pairing vanishes along a direction");
    rep.direction_spread = spread;
    return rep;
}

ReconstructionPair self_reconstruction_pair(const WaveletSpec& psi, int n_directions,
                                            int n_radial) {
    AdmissibilityReport rep = admissibility_constant(psi, psi, n_directions, n_radial);
    return ReconstructionPair{psi, psi, rep.c, rep.direction_spread};
}

std::string pair_to_json(const ReconstructionPair& pair, bool embed_spectra) {
    json j{{"psi", json::parse(wavelet_to_json(pair.psi, embed_spectra))},
           {"phi", json::parse(wavelet_to_json(pair.phi, embed_spectra))},
           {"c", {pair.c.real(), pair.c.imag()}},
           {"direction_spread", pair.direction_spread}};
    return j.dump(2);
}

ReconstructionPair pair_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("pair JSON: parse failure");
    return ReconstructionPair{
        wavelet_from_json(j.at("psi").dump()), wavelet_from_json(j.at("phi").dump()),
        cplx(j.at("c")[0].get<double>(), j.at("c")[1].get<double>()),
        j.at("direction_spread").get<double>()};
}

} // namespace gsw
