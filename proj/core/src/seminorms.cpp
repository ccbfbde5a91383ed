#include "gsw/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"

#include "gsw/fft.hpp"
#include "gsw/parallel.hpp"
#include "gsw/transform.hpp"

namespace gsw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double lnfact(int n) { return std::lgamma(n + 1.0); }

double logaddexp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

// min over multi-indices alpha with |alpha| = total of ln(alpha!)
double min_lnfact(int total, int dim) {
    if (dim == 1) return lnfact(total);
    const int half = total / 2;
    return lnfact(half) + lnfact(total - half);
}

void check_caps(int beta, int k, int l) {
    if (beta < 0 || beta > 12 || k < 0 || k > 12 || l < 0 || l > 12)
        throw ParameterError(
            "seminorm: truncation caps must lie in [0, 12]; lower the caps");
}

// all multi-indices with per-axis entries <= cap (1D: scalars 0..cap)
std::vector<std::array<int, 2>> beta_indices(int dim, int cap) {
    std::vector<std::array<int, 2>> out;
    if (dim == 1) {
        for (int b = 0; b <= cap; ++b) out.push_back({b, 0});
    } else {
        for (int b0 = 0; b0 <= cap; ++b0)
            for (int b1 = 0; b1 + b0 <= cap; ++b1) out.push_back({b0, b1});
    }
    return out;
}

// spectral derivative of one slab: invFFT((i xi)^beta slab^).  Lattice
// spectrum entries below 1e-15 relative are transform roundoff, not data;
// the (i xi)^beta weight would amplify them past the true derivative, so
// they are clipped first.  The clip leaves residual ringing of order
// N * clip, which the value floors downstream stay above.
void derive_slab(const SignalGrid& g, const cplx* spectrum, std::array<int, 2> beta,
                 cplx* out) {
    const int n = g.n();
    double smax = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        smax = std::max(smax, std::abs(spectrum[i]));
    const double clip = 1e-15 * smax;
    auto keep = [&](const cplx& z) { return std::abs(z) > clip ? z : cplx(0.0); };
    if (g.dim() == 1) {
        for (int p = 0; p < n; ++p) {
            cplx w(1.0);
            const double xi = g.freq(p);
            for (int b = 0; b < beta[0]; ++b) w *= cplx(0.0, xi);
            out[p] = keep(spectrum[p]) * w;
        }
    } else {
        for (int p0 = 0; p0 < n; ++p0) {
            cplx w0(1.0);
            const double xi0 = g.freq(p0);
            for (int b = 0; b < beta[0]; ++b) w0 *= cplx(0.0, xi0);
            for (int p1 = 0; p1 < n; ++p1) {
                cplx w = w0;
                const double xi1 = g.freq(p1);
                for (int b = 0; b < beta[1]; ++b) w *= cplx(0.0, xi1);
                out[static_cast<std::size_t>(p0) * n + p1] =
                    keep(spectrum[static_cast<std::size_t>(p0) * n + p1]) * w;
            }
        }
    }
    inverse_fft_slab(g, out);
}

double bracket(const SignalGrid& g, int j0, int j1) {
    const double b0 = g.coord(j0);
    const double b1 = g.dim() == 2 ? g.coord(j1) : 0.0;
    return std::sqrt(1.0 + b0 * b0 + b1 * b1);
}

double abs_b(const SignalGrid& g, int j0, int j1) {
    const double b0 = g.coord(j0);
    const double b1 = g.dim() == 2 ? g.coord(j1) : 0.0;
    return g.dim() == 1 ? std::abs(b0) : std::hypot(b0, b1);
}


// Additive-noise plateau of a derivative slab: spectral differentiation
// spreads transform roundoff almost uniformly over the lattice, so the
// smallest block RMS estimates the noise level.  Values below it carry no
// information and must not meet the boundary weights.
double noise_floor(const std::vector<cplx>& buf) {
    const std::size_t block = 32;
    if (buf.size() < 2 * block) return 0.0;
    double min_rms = kInf;
    for (std::size_t base = 0; base + block <= buf.size(); base += block) {
        double acc = 0.0;
        for (std::size_t i = base; i < base + block; ++i) acc += std::norm(buf[i]);
        min_rms = std::min(min_rms, std::sqrt(acc / block));
    }
    return 8.0 * min_rms;
}

double from_log(double lg) {
    if (lg == kNegInf) return 0.0;
    if (lg > 709.0) return kInf;
    return std::exp(lg);
}

} // namespace

double gs_seminorm(const SampledSignal& f, double rho1, double rho2, double h,
                   int alpha_max, int beta_max) {
    if (!(rho1 > 0.0 && rho2 > 0.0)) throw ParameterError("gs_seminorm: indices > 0");
    if (!(h > 0.0)) throw ParameterError("gs_seminorm: h must be positive");
    check_caps(beta_max, alpha_max, 0);

    const SignalGrid& g = f.grid;
    const SampledSpectrum fhat = forward_fft(f);
    const auto betas = beta_indices(g.dim(), beta_max);
    const double ln_h = std::log(h);

    // weight sup over alpha depends on x only through <x>
    auto alpha_weight = [&](double br) {
        double best = 0.0;   // alpha = 0 term
        const double lb = ln_h + std::log(br);
        for (int a = 1; a <= alpha_max; ++a)
            best = std::max(best, a * lb - rho2 * min_lnfact(a, g.dim()));
        return best;
    };

    std::vector<double> partial(betas.size(), kNegInf);
    std::vector<cplx> buf(g.size());
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        const auto beta = betas[bi];
        double floor = 0.0;
        if (beta[0] == 0 && beta[1] == 0) {
            std::copy(f.values.begin(), f.values.end(), buf.begin());
        } else {
            derive_slab(g, fhat.values.data(), beta, buf.data());
            double vmax = 0.0;
            for (const auto& z : buf) vmax = std::max(vmax, std::abs(z));
            floor = std::max(1e-13 * vmax, noise_floor(buf));
        }
        const double beta_log = (beta[0] + beta[1]) * ln_h -
                                rho1 * (lnfact(beta[0]) + lnfact(beta[1]));
        double best = kNegInf;
        const int n = g.n();
        for (int j0 = 0; j0 < n; ++j0) {
            const int j1_max = g.dim() == 1 ? 1 : n;
            for (int j1 = 0; j1 < j1_max; ++j1) {
                const double v =
                    std::abs(buf[g.dim() == 1 ? j0
                                              : static_cast<std::size_t>(j0) * n + j1]);
                if (v <= floor || v == 0.0) continue;
                best = std::max(best,
                                std::log(v) + alpha_weight(bracket(g, j0, j1)));
            }
        }
        partial[bi] = best + beta_log;
    }
    double total = kNegInf;
    for (double p : partial) total = std::max(total, p);
    return from_log(total);
}

namespace {

struct HalfSpaceScan {
    const HalfSpaceField& field;
    const HalfSpaceIndices& idx;
    double h;
    SeminormCaps caps;
    bool exponential_weight;   // q-form instead of the (k, l1, l2) scan
};

// shared driver for the p and q forms; returns (value_log, outer_log,
// inner_log) where outer/inner split the b-lattice at 80% of the extent
std::array<double, 3> halfspace_scan(const HalfSpaceScan& sc) {
    const HalfSpaceField& field = sc.field;
    const SignalGrid& g = field.sgrid;
    const ScaleGrid& ag = field.agrid;
    const HalfSpaceIndices& idx = sc.idx;
    const double ln_h = std::log(sc.h);
    const int n = g.n();

    // per-scale weight: p-form scans (l1, l2), q-form uses the exponential
    std::vector<double> scale_log(ag.count());
    for (int k = 0; k < ag.count(); ++k) {
        const double a = ag[k];
        if (sc.exponential_weight) {
            scale_log[k] = sc.h * (std::pow(a, 1.0 / idx.tau1) +
                                   std::pow(a, -1.0 / idx.tau2));
        } else {
            const double la = std::log(a);
            double best = kNegInf;
            for (int l1 = 0; l1 <= sc.caps.l; ++l1)
                for (int l2 = 0; l2 <= sc.caps.l; ++l2)
                    best = std::max(best, (l1 + l2) * ln_h - idx.tau1 * lnfact(l1) -
                                              idx.tau2 * lnfact(l2) +
                                              logaddexp(l1 * la, -l2 * la));
            scale_log[k] = best;
        }
    }

    // per-node spatial weight
    std::vector<double> node_log(g.size());
    const double edge = 0.8 * g.half_extent();
    std::vector<char> outer(g.size());
    for (int j0 = 0; j0 < n; ++j0) {
        const int j1_max = g.dim() == 1 ? 1 : n;
        for (int j1 = 0; j1 < j1_max; ++j1) {
            const std::size_t at =
                g.dim() == 1 ? j0 : static_cast<std::size_t>(j0) * n + j1;
            if (sc.exponential_weight) {
                node_log[at] = sc.h * std::pow(abs_b(g, j0, j1), 1.0 / idx.t);
            } else {
                const double lb = ln_h + std::log(bracket(g, j0, j1));
                double best = 0.0;
                for (int k = 1; k <= sc.caps.k; ++k)
                    best = std::max(best, k * lb - idx.t * lnfact(k));
                node_log[at] = best;
            }
            const double m = g.dim() == 1
                ? std::abs(g.coord(j0))
                : std::max(std::abs(g.coord(j0)), std::abs(g.coord(j1)));
            outer[at] = m >= edge ? 1 : 0;
        }
    }

    const auto betas = beta_indices(g.dim(), sc.caps.beta);
    HalfSpaceField F1 = partial_fourier(field, true);

    std::vector<double> best_in(ag.count(), kNegInf), best_out(ag.count(), kNegInf);
    parallel_for(static_cast<std::size_t>(ag.count()), [&](std::size_t k) {
        std::vector<cplx> buf(g.size());
        double bin = kNegInf, bout = kNegInf;
        for (const auto& beta : betas) {
            // beta = 0 uses the field samples themselves: they are exact down
            // to denormals, while a transform round trip would wash the far
            // tails out at the 1e-16 level right where the weights peak
            const bool raw = beta[0] == 0 && beta[1] == 0;
            double floor = 0.0;
            if (raw) {
                const cplx* slab = field.slab(static_cast<int>(k));
                std::copy(slab, slab + g.size(), buf.begin());
            } else {
                derive_slab(g, F1.slab(static_cast<int>(k)), beta, buf.data());
                double vmax = 0.0;
                for (std::size_t at = 0; at < g.size(); ++at)
                    vmax = std::max(vmax, std::abs(buf[at]));
                floor = std::max(1e-13 * vmax, noise_floor(buf));
            }
            const double beta_log = (beta[0] + beta[1]) * ln_h -
                                    idx.s * (lnfact(beta[0]) + lnfact(beta[1]));
            for (std::size_t at = 0; at < g.size(); ++at) {
                const double v = std::abs(buf[at]);
                if (v <= floor || v == 0.0) continue;
                const double lg = std::log(v) + beta_log + node_log[at];
                if (outer[at])
                    bout = std::max(bout, lg);
                else
                    bin = std::max(bin, lg);
            }
        }
        best_in[k] = bin + scale_log[k];
        best_out[k] = bout + scale_log[k];
    });

    double in_log = kNegInf, out_log = kNegInf;
    for (int k = 0; k < ag.count(); ++k) {
        in_log = std::max(in_log, best_in[k]);
        out_log = std::max(out_log, best_out[k]);
    }
    return {std::max(in_log, out_log), out_log, in_log};
}

} // namespace

double halfspace_seminorm_p(const HalfSpaceField& field, const HalfSpaceIndices& idx,
                            double h, SeminormCaps caps) {
    if (!(h > 0.0)) throw ParameterError("halfspace_seminorm_p: h must be positive");
    check_caps(caps.beta, caps.k, caps.l);
    return from_log(halfspace_scan({field, idx, h, caps, false})[0]);
}

double halfspace_seminorm_q(const HalfSpaceField& field, const HalfSpaceIndices& idx,
                            double h, SeminormCaps caps) {
    if (!(h > 0.0)) throw ParameterError("halfspace_seminorm_q: h must be positive");
    check_caps(caps.beta, caps.k, caps.l);
    const auto scan = halfspace_scan({field, idx, h, caps, true});
    if (scan[0] == kNegInf) return 0.0;
    // sup attained on the boundary shell means the weighted values are still
    // growing at the lattice edge: report divergence
    if (scan[1] >= scan[2]) return kInf;
    return from_log(scan[0]);
}

namespace {

bool stable_pair(double v1, double v2) {
    if (!std::isfinite(v1) || !std::isfinite(v2)) return false;
    if (v1 == 0.0 && v2 == 0.0) return true;
    return std::abs(v2 - v1) <= 0.01 * std::max(std::abs(v1), std::abs(v2));
}

SeminormReport assemble_sweep(SeminormKind kind, const std::vector<double>& h_sweep,
                              SeminormCaps caps,
                              const std::function<double(double, SeminormCaps)>& eval) {
    SeminormReport rep;
    rep.kind = kind;
    rep.h_sweep = h_sweep;
    rep.caps = caps;
    SeminormCaps upper{std::min(caps.beta + 2, 12), std::min(caps.k + 2, 12),
                       std::min(caps.l + 2, 12)};
    for (double h : h_sweep) {
        const double v1 = eval(h, caps);
        const double v2 = eval(h, upper);
        rep.values.push_back(v2);
        rep.finite.push_back(stable_pair(v1, v2));
    }
    rep.finite_up_to = 0.0;
    for (std::size_t i = 0; i < h_sweep.size(); ++i)
        if (rep.finite[i]) rep.finite_up_to = std::max(rep.finite_up_to, h_sweep[i]);
    return rep;
}

} // namespace

SeminormReport gs_seminorm_sweep(const SampledSignal& f, double rho1, double rho2,
                                 const std::vector<double>& h_sweep, int alpha_max,
                                 int beta_max) {
    return assemble_sweep(
        SeminormKind::GsP, h_sweep, SeminormCaps{beta_max, alpha_max, 0},
        [&](double h, SeminormCaps c) {
            return gs_seminorm(f, rho1, rho2, h, c.k, c.beta);
        });
}

SeminormReport halfspace_seminorm_sweep(SeminormKind kind, const HalfSpaceField& field,
                                        const HalfSpaceIndices& idx,
                                        const std::vector<double>& h_sweep,
                                        SeminormCaps caps) {
    if (kind == SeminormKind::GsP)
        throw ParameterError("halfspace_seminorm_sweep: use gs_seminorm_sweep");
    return assemble_sweep(kind, h_sweep, caps, [&](double h, SeminormCaps c) {
        return kind == SeminormKind::HalfP ? halfspace_seminorm_p(field, idx, h, c)
                                           : halfspace_seminorm_q(field, idx, h, c);
    });
}

std::string seminorm_report_to_json(const SeminormReport& rep) {
    const char* kind = rep.kind == SeminormKind::GsP
        ? "gs_p"
        : rep.kind == SeminormKind::HalfP ? "half_p" : "half_q";
    nlohmann::json values = nlohmann::json::array();
    for (double v : rep.values) {
        if (std::isinf(v))
            values.push_back(nullptr);   // +inf sentinel
        else
            values.push_back(v == 0.0 ? -std::numeric_limits<double>::max()
                                      : std::log10(v));
    }
    nlohmann::json j{{"kind", kind},
                     {"h_sweep", rep.h_sweep},
                     {"log10_values", values},
                     {"finite", rep.finite},
                     {"finite_up_to", rep.finite_up_to},
                     {"caps",
                      {{"beta", rep.caps.beta}, {"k", rep.caps.k}, {"l", rep.caps.l}}}};
    return j.dump(2);
}

namespace {

struct FitData {
    std::vector<double> x, y;
};

DecaySlice fit_line(const FitData& d, double exponent, double lo, double hi) {
    DecaySlice out;
    out.exponent = exponent;
    out.band_lo = lo;
    out.band_hi = hi;
    out.n_points = static_cast<int>(d.x.size());
    if (d.x.size() < 6)
        throw NumericalError("decay_fit: too few points in the fit band");
    const double n = static_cast<double>(d.x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        sx += d.x[i]; sy += d.y[i];
        sxx += d.x[i] * d.x[i]; sxy += d.x[i] * d.y[i]; syy += d.y[i] * d.y[i];
    }
    const double sxx_c = n * sxx - sx * sx;
    const double syy_c = n * syy - sy * sy;
    const double sxy_c = n * sxy - sx * sy;
    if (sxx_c <= 0.0) throw NumericalError("decay_fit: degenerate abscissa");
    const double slope = sxy_c / sxx_c;
    out.rate = -slope;
    out.r_squared = syy_c > 1e-30 ? (sxy_c * sxy_c) / (sxx_c * syy_c) : 0.0;
    return out;
}

} // namespace

DecayFit decay_fit(const HalfSpaceField& field, double s, double t, double rho1,
                   double rho2) {
    if (!(t > rho2)) throw ParameterError("decay_fit: requires t > rho2");
    if (!(s > rho1)) throw ParameterError("decay_fit: requires s > rho1");
    const SignalGrid& g = field.sgrid;
    const ScaleGrid& ag = field.agrid;
    const int n = g.n();

    // sup over b per scale and sup over a per |b| shell
    std::vector<double> sup_b(ag.count(), 0.0);
    const int shells = n / 2;
    const double shell_w = g.half_extent() / shells;
    std::vector<double> sup_shell(shells, 0.0);
    for (int k = 0; k < ag.count(); ++k) {
        const cplx* slab = field.slab(k);
        for (int j0 = 0; j0 < n; ++j0) {
            const int j1_max = g.dim() == 1 ? 1 : n;
            for (int j1 = 0; j1 < j1_max; ++j1) {
                const std::size_t at =
                    g.dim() == 1 ? j0 : static_cast<std::size_t>(j0) * n + j1;
                const double v = std::abs(slab[at]);
                sup_b[k] = std::max(sup_b[k], v);
                const int shell =
                    std::min(shells - 1,
                             static_cast<int>(abs_b(g, j0, j1) / shell_w));
                sup_shell[shell] = std::max(sup_shell[shell], v);
            }
        }
    }
    double peak = 0.0;
    for (double v : sup_b) peak = std::max(peak, v);
    if (peak <= 0.0) throw NumericalError("decay_fit: zero field");
    const double floor = std::max(1e-300, 3e-13 * peak);

    DecayFit fit;
    const double e_inf = 1.0 / (t - rho2);
    const double e_zero = 1.0 / (s - rho1);
    const double e_b = 1.0 / t;

    {
        FitData d;
        const double lo = ag.a_max() / 10.0;
        for (int k = 0; k < ag.count(); ++k)
            if (ag[k] >= lo && sup_b[k] > floor) {
                d.x.push_back(std::pow(ag[k], e_inf));
                d.y.push_back(std::log(sup_b[k]));
            }
        fit.a_inf = fit_line(d, e_inf, lo, ag.a_max());
    }
    {
        FitData d;
        const double hi = ag.a_min() * 10.0;
        for (int k = 0; k < ag.count(); ++k)
            if (ag[k] <= hi && sup_b[k] > floor) {
                d.x.push_back(std::pow(ag[k], -e_zero));
                d.y.push_back(std::log(sup_b[k]));
            }
        fit.a_zero = fit_line(d, e_zero, ag.a_min(), hi);
    }
    {
        FitData d;
        const double lo = 0.08 * g.half_extent();
        const double hi = 0.85 * g.half_extent();
        for (int sh = 0; sh < shells; ++sh) {
            const double r = (sh + 0.5) * shell_w;
            if (r < lo || r > hi || sup_shell[sh] <= floor) continue;
            d.x.push_back(std::pow(r, e_b));
            d.y.push_back(std::log(sup_shell[sh]));
        }
        fit.b_decay = fit_line(d, e_b, lo, hi);
    }
    return fit;
}

std::string decay_fit_to_json(const DecayFit& fit) {
    auto slice = [](const DecaySlice& s) {
        return nlohmann::json{{"rate", s.rate},
                              {"exponent", s.exponent},
                              {"r_squared", s.r_squared},
                              {"band", {s.band_lo, s.band_hi}},
                              {"n_points", s.n_points}};
    };
    nlohmann::json j{{"a_inf", slice(fit.a_inf)},
                     {"a_zero", slice(fit.a_zero)},
                     {"b_decay", slice(fit.b_decay)}};
    return j.dump(2);
}

IndexCalculusResult index_calculus(double rho1, double rho2, double s, double t,
                                   double tau1, double tau2, IndexTheorem theorem) {
    IndexCalculusResult r;
    r.theorem = theorem;
    r.rho1 = rho1;
    r.rho2 = rho2;
    auto hyp = [&](const std::string& name, bool ok) {
        r.hypotheses[name] = ok;
        if (!ok) r.all_hypotheses_ok = false;
    };
    hyp("rho1>0", rho1 > 0.0);
    hyp("rho2>1", rho2 > 1.0);
    hyp("s>0", s > 0.0);

    switch (theorem) {
        case IndexTheorem::T3:
            r.forward = true;
            r.signal_upper = std::min(s, tau2 - rho2 + 1.0);
            r.signal_lower = 1.0 - rho1 + std::min(t - rho2, tau1);
            r.field_s = s;
            r.field_t = t;
            r.field_tau1 = tau1;
            r.field_tau2 = tau2;
            hyp("t>rho1+rho2", t > rho1 + rho2);
            hyp("tau1>rho1", tau1 > rho1);
            hyp("tau2>rho2-1", tau2 > rho2 - 1.0);
            break;
        case IndexTheorem::T3Remark:
            r.forward = true;
            r.signal_upper = s;
            r.signal_lower = t + 1.0 - rho1 - rho2;
            r.field_s = s;
            r.field_t = t;
            r.field_tau1 = t - rho2;
            r.field_tau2 = s + rho2 - 1.0;
            hyp("t>rho1+rho2", t > rho1 + rho2);
            break;
        case IndexTheorem::T4a:
            // field upper index is the free parameter tau (passed as tau1)
            r.forward = false;
            r.signal_upper = s;
            r.signal_lower = t;
            r.field_s = tau1;
            r.field_t = t;
            r.field_tau1 = t - rho2;
            r.field_tau2 = s - rho1;
            hyp("t>rho2", t > rho2);
            hyp("s>rho1", s > rho1);
            hyp("tau>0", tau1 > 0.0);
            break;
        case IndexTheorem::T4b:
            // field a->0 index is the free parameter tau (passed as tau2)
            r.forward = false;
            r.signal_upper = s;
            r.signal_lower = t;
            r.field_s = s;
            r.field_t = t;
            r.field_tau1 = t - rho2;
            r.field_tau2 = tau2;
            hyp("t>rho2", t > rho2);
            hyp("tau>0", tau2 > 0.0);
            break;
    }
    return r;
}

std::string index_result_to_json(const IndexCalculusResult& res) {
    const char* name = res.theorem == IndexTheorem::T3
        ? "T3"
        : res.theorem == IndexTheorem::T3Remark
            ? "T3-remark"
            : res.theorem == IndexTheorem::T4a ? "T4a" : "T4b";
    nlohmann::json j{{"theorem", name},
                     {"rho1", res.rho1},
                     {"rho2", res.rho2},
                     {"direction", res.forward ? "analysis" : "synthesis"},
                     {"signal_space",
                      {{"upper", res.signal_upper}, {"lower", res.signal_lower}}},
                     {"field_space",
                      {{"s", res.field_s},
                       {"t", res.field_t},
                       {"tau1", res.field_tau1},
                       {"tau2", res.field_tau2}}},
                     {"hypotheses", res.hypotheses},
                     {"all_hypotheses_ok", res.all_hypotheses_ok}};
    return j.dump(2);
}

} // namespace gsw
