#include "gsw/wavelet.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "gsw/io.hpp"
#include "gsw/parallel.hpp"

namespace gsw {

using json = nlohmann::json;

namespace {

double ball_value(const BallBump& b, std::array<double, 2> xi, int dim) {
    const double d0 = xi[0] - b.center[0];
    const double d1 = dim == 2 ? xi[1] - b.center[1] : 0.0;
    const double d2 = d0 * d0 + d1 * d1;
    const double r2 = b.radius * b.radius;
    if (d2 >= r2) return 0.0;
    const double q = 1.0 / (2.0 * (b.order - 1.0));
    return b.amplitude * std::exp(std::pow(r2, -q) - std::pow(r2 - d2, -q));
}

double sinc_ratio(double s, double x, double p) {
    // sin(pi(x - p)) = s * (-1)^p with s = sin(pi x); caller folds the parity.
    return s / (M_PI * (x - p));
}

cplx sampled_eval_1d(const SampledSpectrum& sp, double xi) {
    const SignalGrid& g = sp.grid;
    const double x = (xi - g.freq(0)) / g.freq_spacing();
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9) {
        const int p = static_cast<int>(nearest);
        return (p >= 0 && p < g.n()) ? sp.values[p] : cplx(0.0);
    }
    if (x < -0.5 || x > g.n() - 0.5) return cplx(0.0);
    const double s = std::sin(M_PI * x);
    cplx acc(0.0);
    double sign = 1.0;
    for (int p = 0; p < g.n(); ++p, sign = -sign)
        acc += sp.values[p] * (sign * sinc_ratio(s, x, p));
    return acc;
}

cplx sampled_eval_2d(const SampledSpectrum& sp, std::array<double, 2> xi) {
    const SignalGrid& g = sp.grid;
    const int n = g.n();
    const double dxi = g.freq_spacing();
    const double x0 = (xi[0] - g.freq(0)) / dxi;
    const double x1 = (xi[1] - g.freq(0)) / dxi;
    const bool on0 = std::abs(x0 - std::round(x0)) < 1e-9;
    const bool on1 = std::abs(x1 - std::round(x1)) < 1e-9;
    if ((x0 < -0.5 || x0 > n - 0.5) || (x1 < -0.5 || x1 > n - 0.5)) return cplx(0.0);

    auto row_value = [&](int p0) -> cplx {
        const cplx* row = sp.values.data() + static_cast<std::size_t>(p0) * n;
        if (on1) {
            const int p1 = static_cast<int>(std::round(x1));
            return (p1 >= 0 && p1 < n) ? row[p1] : cplx(0.0);
        }
        const double s1 = std::sin(M_PI * x1);
        cplx acc(0.0);
        double sign = 1.0;
        for (int p1 = 0; p1 < n; ++p1, sign = -sign)
            acc += row[p1] * (sign * sinc_ratio(s1, x1, p1));
        return acc;
    };

    if (on0) {
        const int p0 = static_cast<int>(std::round(x0));
        return (p0 >= 0 && p0 < n) ? row_value(p0) : cplx(0.0);
    }
    const double s0 = std::sin(M_PI * x0);
    cplx acc(0.0);
    double sign = 1.0;
    for (int p0 = 0; p0 < n; ++p0, sign = -sign)
        acc += row_value(p0) * (sign * sinc_ratio(s0, x0, p0));
    return acc;
}

double ratio_g(const RatioModel& m, std::array<double, 2> xi, double r, int dim) {
    if (dim == 1) return xi[0] >= 0.0 ? m.g_table[0] : m.g_table[1];
    const int M = static_cast<int>(m.g_table.size());
    double theta = std::atan2(xi[1] / r, xi[0] / r);
    if (theta < 0.0) theta += 2.0 * M_PI;
    const double u = theta * M / (2.0 * M_PI);
    int i = static_cast<int>(u);
    if (i >= M) i = 0;
    const double frac = u - i;
    return (1.0 - frac) * m.g_table[i] + frac * m.g_table[(i + 1) % M];
}

} // namespace

int SpectrumModel::dim() const {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) return m.dim;
            else if constexpr (std::is_same_v<T, RadialModel>) return m.dim;
            else if constexpr (std::is_same_v<T, SampledModel>) return m.samples.grid.dim();
            else return m.base->dim();
        },
        storage_);
}

bool SpectrumModel::closed_form() const {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SampledModel>) return false;
            else if constexpr (std::is_same_v<T, RatioModel>) return m.base->closed_form();
            else return true;
        },
        storage_);
}

bool SpectrumModel::real_valued() const {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SampledModel>) {
                for (const auto& z : m.samples.values)
                    if (z.imag() != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, RatioModel>) {
                return m.base->real_valued();
            } else {
                return true;
            }
        },
        storage_);
}

cplx SpectrumModel::eval(std::array<double, 2> xi) const {
    return std::visit(
        [&](const auto& m) -> cplx {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) {
                double v = 0.0;
                for (const auto& b : m.bumps) v += ball_value(b, xi, m.dim);
                return cplx(v, 0.0);
            } else if constexpr (std::is_same_v<T, RadialModel>) {
                const double r = m.dim == 1 ? std::abs(xi[0]) : std::hypot(xi[0], xi[1]);
                return cplx(m.profile(r), 0.0);
            } else if constexpr (std::is_same_v<T, SampledModel>) {
                const double r = m.samples.grid.dim() == 1 ? std::abs(xi[0])
                                                           : std::hypot(xi[0], xi[1]);
                if (r > m.support_radius) return cplx(0.0);
                return m.samples.grid.dim() == 1 ? sampled_eval_1d(m.samples, xi[0])
                                                 : sampled_eval_2d(m.samples, xi);
            } else {
                const int dim = m.base->dim();
                const double r = dim == 1 ? std::abs(xi[0]) : std::hypot(xi[0], xi[1]);
                if (r == 0.0) return cplx(0.0);
                const double e = m.eta(r);
                if (e == 0.0) return cplx(0.0);
                return m.base->eval(xi) * (e / ratio_g(m, xi, r, dim));
            }
        },
        storage_);
}

std::array<double, 2> SpectrumModel::radial_support() const {
    return std::visit(
        [](const auto& m) -> std::array<double, 2> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) {
                double lo = 1e300, hi = 0.0;
                for (const auto& b : m.bumps) {
                    const double c = std::hypot(b.center[0], b.center[1]);
                    lo = std::min(lo, std::max(0.0, c - b.radius));
                    hi = std::max(hi, c + b.radius);
                }
                if (m.bumps.empty()) lo = 0.0;
                return {lo, hi};
            } else if constexpr (std::is_same_v<T, RadialModel>) {
                return {m.profile.lo(), m.profile.hi()};
            } else if constexpr (std::is_same_v<T, SampledModel>) {
                return {0.0, m.support_radius};
            } else {
                auto base = m.base->radial_support();
                return {std::max(base[0], m.eta.support_lo()),
                        std::min(base[1], m.eta.support_hi())};
            }
        },
        storage_);
}

SpectrumModel SpectrumModel::scaled(double factor) const {
    return std::visit(
        [&](const auto& m) -> SpectrumModel {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) {
                BallBumpSumModel c = m;
                for (auto& b : c.bumps) b.amplitude *= factor;
                return SpectrumModel(std::move(c));
            } else if constexpr (std::is_same_v<T, RadialModel>) {
                RadialModel c{m.dim,
                              GevreyBump(m.profile.order(), m.profile.lo(), m.profile.hi(),
                                         m.profile.amplitude() * factor)};
                return SpectrumModel(std::move(c));
            } else if constexpr (std::is_same_v<T, SampledModel>) {
                SampledModel c = m;
                for (auto& z : c.samples.values) z *= factor;
                return SpectrumModel(std::move(c));
            } else {
                // eta * base / g scales through g: dividing every table entry
                // by `factor` multiplies the value by it.
                RatioModel c = m;
                for (auto& gv : c.g_table) gv /= factor;
                return SpectrumModel(std::move(c));
            }
        },
        storage_);
}

SampledSpectrum sample_model(const SpectrumModel& model, const SignalGrid& grid) {
    if (model.dim() != grid.dim())
        throw ParameterError("sample_model: dimension mismatch");
    SampledSpectrum out = SampledSpectrum::zeros(grid);
    const int n = grid.n();
    if (grid.dim() == 1) {
        for (int p = 0; p < n; ++p)
            out.values[p] = model.eval({grid.freq(p), 0.0});
    } else {
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t p0) {
            const double xi0 = grid.freq(static_cast<int>(p0));
            for (int p1 = 0; p1 < n; ++p1)
                out.values[p0 * n + p1] = model.eval({xi0, grid.freq(p1)});
        });
    }
    return out;
}

WaveletSpec make_wavelet(GevreyIndices idx, std::string label, SpectrumModel model,
                         const SignalGrid& grid) {
    SampledSpectrum spec = sample_model(model, grid);
    return WaveletSpec{idx, std::move(label), std::move(model), std::move(spec)};
}

WaveletSpec make_sampled_wavelet(GevreyIndices idx, std::string label,
                                 SampledSpectrum spectrum,
                                 std::optional<double> support_radius) {
    const double r = support_radius.value_or(spectrum.grid.nyquist());
    SampledModel m{spectrum, r};
    return WaveletSpec{idx, std::move(label), SpectrumModel(std::move(m)),
                       std::move(spectrum)};
}

WaveletSpec design_directional_wavelet(int dim, GevreyIndices indices,
                                       const SignalGrid& grid, std::string label) {
    if (dim != 1 && dim != 2)
        throw ParameterError("design_directional_wavelet: dim must be 1 or 2");
    if (grid.dim() != dim)
        throw ParameterError("design_directional_wavelet: grid dimension mismatch");
    if (grid.nyquist() < 2.0)
        throw ParameterError(
            "design_directional_wavelet: grid cannot resolve the unit-ball supports "
            "(nyquist < 2)");
    BallBumpSumModel m;
    m.dim = dim;
    for (int j = 0; j < dim; ++j) {
        BallBump plus;
        plus.center = {0.0, 0.0};
        plus.center[j] = 0.5;
        plus.radius = 0.5;
        plus.order = indices.rho2;
        BallBump minus = plus;
        minus.center[j] = -0.5;
        m.bumps.push_back(plus);
        m.bumps.push_back(minus);
    }
    return make_wavelet(indices, std::move(label), SpectrumModel(std::move(m)), grid);
}

WaveletSpec design_radial_wavelet(int dim, GevreyIndices indices, const SignalGrid& grid,
                                  double r0, double r1, std::string label) {
    if (grid.dim() != dim)
        throw ParameterError("design_radial_wavelet: grid dimension mismatch");
    if (!(r0 > 0.0))
        throw ParameterError("design_radial_wavelet: annulus must exclude xi = 0");
    if (r1 > grid.nyquist())
        throw ParameterError("design_radial_wavelet: annulus exceeds the grid band");
    RadialModel m{dim, GevreyBump(indices.rho2, r0, r1)};
    return make_wavelet(indices, std::move(label), SpectrumModel(std::move(m)), grid);
}

WaveletSpec scale_wavelet(const WaveletSpec& w, double factor) {
    WaveletSpec out{w.indices, w.label, w.model.scaled(factor), w.spectrum};
    for (auto& z : out.spectrum.values) z *= factor;
    return out;
}

namespace {

bool model_is_even(const SpectrumModel& model) {
    return std::visit(
        [&](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) {
                for (const auto& b : m.bumps) {
                    bool found = false;
                    for (const auto& o : m.bumps)
                        if (o.center[0] == -b.center[0] && o.center[1] == -b.center[1] &&
                            o.radius == b.radius && o.order == b.order &&
                            o.amplitude == b.amplitude) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, RadialModel>) {
                return true;
            } else if constexpr (std::is_same_v<T, RatioModel>) {
                if (!model_is_even(*m.base)) return false;
                const std::size_t M = m.g_table.size();
                if (M == 2) return m.g_table[0] == m.g_table[1];
                if (M % 2 != 0) return false;
                for (std::size_t i = 0; i < M / 2; ++i)
                    if (m.g_table[i] != m.g_table[i + M / 2]) return false;
                return true;
            } else {
                return false;
            }
        },
        model.storage());
}

} // namespace

WaveletSpec conjugate_wavelet(const WaveletSpec& w) {
    if (w.model.real_valued() && model_is_even(w.model)) return w;
    // General case: reflect and conjugate the lattice samples.
    const SignalGrid& g = w.spectrum.grid;
    const int n = g.n();
    SampledSpectrum mirrored = SampledSpectrum::zeros(g);
    auto mirror = [n](int p) { return (n - p) % n; };
    if (g.dim() == 1) {
        for (int p = 0; p < n; ++p)
            mirrored.values[p] = std::conj(w.spectrum.values[mirror(p)]);
    } else {
        for (int p0 = 0; p0 < n; ++p0)
            for (int p1 = 0; p1 < n; ++p1)
                mirrored.values[static_cast<std::size_t>(p0) * n + p1] = std::conj(
                    w.spectrum.values[static_cast<std::size_t>(mirror(p0)) * n + mirror(p1)]);
    }
    const double radius = w.model.radial_support()[1];
    return make_sampled_wavelet(w.indices, w.label + "_conj", std::move(mirrored), radius);
}

namespace {

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

} // namespace

MomentReport check_vanishing_moments(const WaveletSpec& w, int max_order, double tol) {
    if (max_order < 0 || max_order > 12)
        throw ParameterError("check_vanishing_moments: max_order must be in [0, 12]");
    const SignalGrid& g = w.spectrum.grid;
    const double peak = w.spectrum.max_abs();
    if (peak == 0.0) throw NumericalError("check_vanishing_moments: trivial wavelet");

    const bool closed = w.model.closed_form();
    const double dxi = g.freq_spacing();
    const double delta = closed ? 1e-5 * dxi : dxi;
    if (!closed && max_order > g.n() / 2 - 1)
        throw ResolutionError(
            "check_vanishing_moments: lattice cannot support the requested order");

    // probe(s0, s1): spectrum value at integer-step offsets (s0*delta, s1*delta)
    auto probe = [&](int s0, int s1) -> cplx {
        if (closed)
            return w.model.eval({s0 * delta, g.dim() == 2 ? s1 * delta : 0.0});
        const int p0 = g.n() / 2 + s0;
        if (g.dim() == 1) return w.spectrum.values[p0];
        const int p1 = g.n() / 2 + s1;
        return w.spectrum.values[w.spectrum.index(p0, p1)];
    };

    MomentReport rep;
    rep.max_order = max_order;
    rep.tolerance = tol * peak;
    rep.stencil = delta;
    rep.moment_bounds.assign(max_order + 1, 0.0);

    // Central difference of order m with step delta:
    //   f^{(m)}(0) ~= (2 delta)^{-m} sum_k (-1)^k C(m,k) f((m-2k) delta);
    // offsets share the parity of m, so sampled spectra are probed on-lattice.
    if (g.dim() == 1) {
        for (int m = 0; m <= max_order; ++m) {
            cplx acc(0.0);
            for (int k = 0; k <= m; ++k) {
                const double c = (k % 2 == 0 ? 1.0 : -1.0) * binom(m, k);
                acc += c * probe(m - 2 * k, 0);
            }
            acc /= std::pow(2.0 * delta, m);
            rep.moment_bounds[m] = std::max(rep.moment_bounds[m], std::abs(acc));
        }
    } else {
        for (int m0 = 0; m0 <= max_order; ++m0)
            for (int m1 = 0; m0 + m1 <= max_order; ++m1) {
                cplx acc(0.0);
                for (int k0 = 0; k0 <= m0; ++k0) {
                    const double c0 = (k0 % 2 == 0 ? 1.0 : -1.0) * binom(m0, k0);
                    for (int k1 = 0; k1 <= m1; ++k1) {
                        const double c1 = (k1 % 2 == 0 ? 1.0 : -1.0) * binom(m1, k1);
                        acc += c0 * c1 * probe(m0 - 2 * k0, m1 - 2 * k1);
                    }
                }
                acc /= std::pow(2.0 * delta, m0 + m1);
                rep.moment_bounds[m0 + m1] =
                    std::max(rep.moment_bounds[m0 + m1], std::abs(acc));
            }
    }

    rep.verdict = true;
    for (double b : rep.moment_bounds)
        if (!(b <= rep.tolerance)) rep.verdict = false;
    return rep;
}

NondegeneracyReport check_nondegenerate(const WaveletSpec& w, int n_directions,
                                        int n_radii, double tol) {
    if (n_directions < 2)
        throw ParameterError("check_nondegenerate: need at least 2 directions");
    if (n_radii < 16)
        throw ParameterError("check_nondegenerate: need at least 16 radii");
    const double peak = w.spectrum.max_abs();
    if (peak == 0.0) throw NumericalError("check_nondegenerate: trivial wavelet");

    const SignalGrid& g = w.spectrum.grid;
    const double r_hi = g.nyquist();
    const double r_lo = r_hi * 1e-4;
    const double step = std::log(r_hi / r_lo) / (n_radii - 1);

    std::vector<std::array<double, 2>> dirs;
    if (g.dim() == 1) {
        dirs = {{1.0, 0.0}, {-1.0, 0.0}};
    } else {
        dirs.reserve(n_directions);
        for (int i = 0; i < n_directions; ++i) {
            const double th = 2.0 * M_PI * i / n_directions;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
    }

    NondegeneracyReport rep;
    rep.tolerance = tol * peak;
    rep.worst_mass = 1e300;
    for (const auto& om : dirs) {
        double mass = 0.0;
        for (int i = 0; i < n_radii; ++i) {
            const double r = r_lo * std::exp(i * step);
            mass = std::max(mass, std::abs(w.eval_hat({r * om[0], r * om[1]})));
        }
        if (mass < rep.worst_mass) {
            rep.worst_mass = mass;
            rep.worst_direction = om;
        }
    }
    rep.verdict = rep.worst_mass > rep.tolerance;
    return rep;
}

namespace {

json model_to_json(const SpectrumModel& model) {
    return std::visit(
        [](const auto& m) -> json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BallBumpSumModel>) {
                json bumps = json::array();
                for (const auto& b : m.bumps)
                    bumps.push_back({{"center", {b.center[0], b.center[1]}},
                                     {"radius", b.radius},
                                     {"order", b.order},
                                     {"amplitude", b.amplitude}});
                return {{"kind", "ball_sum"}, {"dim", m.dim}, {"bumps", bumps}};
            } else if constexpr (std::is_same_v<T, RadialModel>) {
                return {{"kind", "radial"},
                        {"dim", m.dim},
                        {"order", m.profile.order()},
                        {"r0", m.profile.lo()},
                        {"r1", m.profile.hi()},
                        {"amplitude", m.profile.amplitude()}};
            } else if constexpr (std::is_same_v<T, SampledModel>) {
                return {{"kind", "sampled"},
                        {"support_radius", m.support_radius},
                        {"spectrum_b64", base64_encode(spectrum_to_bytes(m.samples))}};
            } else {
                return {{"kind", "ratio"},
                        {"eta",
                         {{"order", m.eta.order()},
                          {"lo", m.eta.plateau_lo()},
                          {"hi", m.eta.plateau_hi()},
                          {"width", m.eta.width()}}},
                        {"g_table", m.g_table},
                        {"base", model_to_json(*m.base)}};
            }
        },
        model.storage());
}

SpectrumModel model_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball_sum") {
        BallBumpSumModel m;
        m.dim = j.at("dim").get<int>();
        for (const auto& bj : j.at("bumps")) {
            BallBump b;
            b.center = {bj.at("center")[0].get<double>(), bj.at("center")[1].get<double>()};
            b.radius = bj.at("radius").get<double>();
            b.order = bj.at("order").get<double>();
            b.amplitude = bj.at("amplitude").get<double>();
            m.bumps.push_back(b);
        }
        return SpectrumModel(std::move(m));
    }
    if (kind == "radial") {
        RadialModel m{j.at("dim").get<int>(),
                      GevreyBump(j.at("order").get<double>(), j.at("r0").get<double>(),
                                 j.at("r1").get<double>(), j.at("amplitude").get<double>())};
        return SpectrumModel(std::move(m));
    }
    if (kind == "sampled") {
        SampledModel m{spectrum_from_bytes(
                           base64_decode(j.at("spectrum_b64").get<std::string>())),
                       j.at("support_radius").get<double>()};
        return SpectrumModel(std::move(m));
    }
    if (kind == "ratio") {
        const json& e = j.at("eta");
        RatioModel m{PlateauProfile(e.at("order").get<double>(), e.at("lo").get<double>(),
                                    e.at("hi").get<double>(), e.at("width").get<double>()),
                     std::make_shared<SpectrumModel>(model_from_json(j.at("base"))),
                     j.at("g_table").get<std::vector<double>>()};
        return SpectrumModel(std::move(m));
    }
    throw IoError("wavelet JSON: unknown model kind '" + kind + "'");
}

} // namespace

std::string wavelet_to_json(const WaveletSpec& w, bool embed_spectrum) {
    json j{{"label", w.label},
           {"rho1", w.indices.rho1},
           {"rho2", w.indices.rho2},
           {"grid", json::parse(signal_grid_to_json(w.spectrum.grid))},
           {"model", model_to_json(w.model)}};
    if (embed_spectrum || !w.model.closed_form())
        j["spectrum_b64"] = base64_encode(spectrum_to_bytes(w.spectrum));
    return j.dump(2);
}

WaveletSpec wavelet_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("wavelet JSON: parse failure");
    GevreyIndices idx(j.at("rho1").get<double>(), j.at("rho2").get<double>());
    SignalGrid grid = signal_grid_from_json(j.at("grid").dump());
    SpectrumModel model = model_from_json(j.at("model"));
    SampledSpectrum spectrum = j.contains("spectrum_b64")
        ? spectrum_from_bytes(base64_decode(j.at("spectrum_b64").get<std::string>()))
        : sample_model(model, grid);
    return WaveletSpec{idx, j.at("label").get<std::string>(), std::move(model),
                       std::move(spectrum)};
}

} // namespace gsw
